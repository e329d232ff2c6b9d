"""Exact-arithmetic lattice reduction and approximate closest-vector search.

Everything here runs on python ints and Fractions; there is no floating
point anywhere, so reduction output is deterministic and bit-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import IterationCapExceeded, OracleTooLarge, RankDeficient
from .rounding import round_half_away

Vector = tuple[int, ...]

# Budget for delta = 1, where termination is not guaranteed in polynomial time.
LLL_ITERATION_CAP = 10**6

# Hard cap on brute-force CVP grid points.
BRUTE_FORCE_POINT_CAP = 10**8


@dataclass(frozen=True)
class Basis:
    """Ordered list of linearly independent integer columns of length n+1."""

    columns: tuple[Vector, ...]

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def ambient_dim(self) -> int:
        return len(self.columns[0])

    def rows(self) -> list[list[int]]:
        return [[col[i] for col in self.columns] for i in range(self.ambient_dim)]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "Basis":
        n = len(rows[0])
        return Basis(columns=tuple(tuple(row[j] for row in rows) for j in range(n)))


@dataclass(frozen=True)
class GramSchmidtData:
    ortho: tuple[tuple[Fraction, ...], ...]
    mu: tuple[tuple[Fraction, ...], ...]  # mu[i][j] defined for j < i
    norms_sq: tuple[Fraction, ...]


@dataclass(frozen=True)
class ReductionResult:
    reduced: Basis
    transform: tuple[tuple[int, ...], ...]  # n x n, reduced = original @ transform
    delta: Fraction


@dataclass(frozen=True)
class BabaiResult:
    b_op: Vector
    coeffs_reduced: tuple[int, ...]
    coeffs_original: tuple[int, ...]
    residual: Vector
    dist_sq: int


@dataclass(frozen=True)
class CvpOracleResult:
    vector: Vector
    coeffs: tuple[int, ...]
    dist_sq: int


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), start=Fraction(0))


def gram_schmidt(basis: Basis) -> GramSchmidtData:
    """Exact Gram-Schmidt orthogonalization of the basis columns."""
    ortho: list[list[Fraction]] = []
    mu: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for i, col in enumerate(basis.columns):
        vec = [Fraction(x) for x in col]
        coeffs = []
        for j in range(i):
            m = _dot(col, ortho[j]) / norms[j]
            coeffs.append(m)
            vec = [v - m * o for v, o in zip(vec, ortho[j])]
        norm = _dot(vec, vec)
        if norm == 0:
            raise RankDeficient(f"column {i} is dependent on earlier columns")
        ortho.append(vec)
        mu.append(coeffs)
        norms.append(norm)
    return GramSchmidtData(
        ortho=tuple(tuple(v) for v in ortho),
        mu=tuple(tuple(row) for row in mu),
        norms_sq=tuple(norms),
    )


def lll_reduce(basis: Basis, delta: Fraction = Fraction(3, 4)) -> ReductionResult:
    """Standard LLL: full size-reduction sweep j = k-1..1, then the Lovász test.

    Tracks the unimodular change of basis so callers can map coefficients
    back to the original basis.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError(f"delta must lie in (1/4, 1], got {delta}")
    n = basis.n
    b = [list(col) for col in basis.columns]
    u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # u[j] = col j

    gs = gram_schmidt(Basis(columns=tuple(tuple(c) for c in b)))
    mu = [list(row) for row in gs.mu]
    norms = list(gs.norms_sq)

    def refresh():
        nonlocal mu, norms
        data = gram_schmidt(Basis(columns=tuple(tuple(c) for c in b)))
        mu = [list(row) for row in data.mu]
        norms = list(data.norms_sq)

    k = 2
    iterations = 0
    while k <= n:
        iterations += 1
        if delta == 1 and iterations > LLL_ITERATION_CAP:
            raise IterationCapExceeded(f"no convergence within {LLL_ITERATION_CAP} iterations")
        for j in range(k - 1, 0, -1):
            if abs(mu[k - 1][j - 1]) > Fraction(1, 2):
                r = round_half_away(mu[k - 1][j - 1])
                b[k - 1] = [x - r * y for x, y in zip(b[k - 1], b[j - 1])]
                u[k - 1] = [x - r * y for x, y in zip(u[k - 1], u[j - 1])]
                refresh()
        if norms[k - 1] >= (delta - mu[k - 1][k - 2] ** 2) * norms[k - 2]:
            k += 1
        else:
            b[k - 1], b[k - 2] = b[k - 2], b[k - 1]
            u[k - 1], u[k - 2] = u[k - 2], u[k - 1]
            refresh()
            k = max(k - 1, 2)

    reduced = Basis(columns=tuple(tuple(c) for c in b))
    # transform[i][j] = coefficient of original column i in reduced column j
    transform = tuple(tuple(u[j][i] for j in range(n)) for i in range(n))
    return ReductionResult(reduced=reduced, transform=transform, delta=delta)


def is_lll_reduced(
    basis: Basis, delta: Fraction = Fraction(3, 4)
) -> tuple[bool, Optional[str]]:
    """Check size-reduction and the Lovász condition; report the first violation."""
    delta = Fraction(delta)
    if basis.n <= 1:
        return True, None
    gs = gram_schmidt(basis)
    for i in range(1, basis.n):
        for j in range(i):
            if abs(gs.mu[i][j]) > Fraction(1, 2):
                return False, f"size reduction fails at (i={i + 1}, j={j + 1}): |mu| = {abs(gs.mu[i][j])}"
    for i in range(1, basis.n):
        lhs = gs.norms_sq[i] + gs.mu[i][i - 1] ** 2 * gs.norms_sq[i - 1]
        if lhs < delta * gs.norms_sq[i - 1]:
            return False, f"Lovász condition fails at i = {i + 1}"
    return True, None


def babai_nearest_plane(reduction: ReductionResult, t: Sequence[int]) -> BabaiResult:
    """Babai's nearest-plane approximation to the closest lattice vector."""
    basis = reduction.reduced
    n = basis.n
    if len(t) != basis.ambient_dim:
        raise ValueError(f"target length {len(t)} != ambient dimension {basis.ambient_dim}")
    gs = gram_schmidt(basis)
    residual = [Fraction(x) for x in t]
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        c = round_half_away(_dot(residual, gs.ortho[i]) / gs.norms_sq[i])
        coeffs[i] = c
        residual = [r - c * Fraction(bx) for r, bx in zip(residual, basis.columns[i])]
    b_op = tuple(int(tx - r) for tx, r in zip(t, residual))
    res_int = tuple(int(r) for r in residual)
    coeffs_original = tuple(
        sum(reduction.transform[i][j] * coeffs[j] for j in range(n)) for i in range(n)
    )
    return BabaiResult(
        b_op=b_op,
        coeffs_reduced=tuple(coeffs),
        coeffs_original=coeffs_original,
        residual=res_int,
        dist_sq=sum(r * r for r in res_int),
    )


def brute_force_cvp(basis: Basis, t: Sequence[int], bound: int) -> CvpOracleResult:
    """Exhaustive CVP over coefficients in [-bound, bound]^n; test oracle only.

    Ties break toward the lexicographically smallest coefficient vector.
    """
    n = basis.n
    points = (2 * bound + 1) ** n
    if points > BRUTE_FORCE_POINT_CAP:
        raise OracleTooLarge(f"{points} grid points exceeds cap {BRUTE_FORCE_POINT_CAP}")
    best: Optional[tuple[int, tuple[int, ...], Vector]] = None
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=n):
        vec = tuple(
            sum(c * col[i] for c, col in zip(coeffs, basis.columns))
            for i in range(basis.ambient_dim)
        )
        dist_sq = sum((x - y) ** 2 for x, y in zip(vec, t))
        key = (dist_sq, coeffs, vec)
        if best is None or key < best:
            best = key
    assert best is not None
    dist_sq, coeffs, vec = best
    return CvpOracleResult(vector=vec, coeffs=coeffs, dist_sq=dist_sq)
