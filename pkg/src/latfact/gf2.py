"""Mod-2 relation system, nullspace search, and factor extraction.

A subset S of relations whose combined exponents (of u_j and of
u_j - v_j N together) are all even gives a congruence of squares
U^2 = (UW) = Z^2 mod N, from which gcd(U -+ Z, N) can split N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalInconsistency
from .relations import SmoothRelation


@dataclass(frozen=True)
class RelationMatrix:
    # rows[i] is a bitmask over relation columns; row 0 is the sign of
    # u - vN, row i >= 1 the parity for the i-th smooth-basis prime
    rows: tuple[int, ...]
    n_cols: int
    smooth_primes: tuple[int, ...]


@dataclass(frozen=True)
class FactorResult:
    status: str  # "found" | "all-trivial" | "no-solution"
    factors: Optional[tuple[int, int]] = None
    selection: Optional[tuple[int, ...]] = None
    U: Optional[int] = None
    W: Optional[int] = None
    Z: Optional[int] = None


def _u_exponent(relation: SmoothRelation, prime_index: int, smooth_primes: Sequence[int]) -> int:
    # the uv exponent vector lives on the lattice primes, a prefix of the
    # smooth basis; positive entries belong to u
    lattice_exps = relation.pair.exponents
    if prime_index < len(lattice_exps) and lattice_exps[prime_index] > 0:
        return lattice_exps[prime_index]
    return 0


def build_system(
    relations: Sequence[SmoothRelation], smooth_primes: Sequence[int]
) -> RelationMatrix:
    """Parity matrix with one column per relation.

    Row i collects the exponent of prime i in u_j plus its exponent in
    u_j - v_j N, mod 2; the sign row only counts the residue sign.
    """
    if not relations:
        raise ValueError("need at least one relation")
    k = len(smooth_primes)
    rows = [0] * (k + 1)
    for j, rel in enumerate(relations):
        if rel.residue_exponents[0] & 1:
            rows[0] |= 1 << j
        for i in range(k):
            parity = (_u_exponent(rel, i, smooth_primes) + rel.residue_exponents[i + 1]) & 1
            if parity:
                rows[i + 1] |= 1 << j
    return RelationMatrix(
        rows=tuple(rows), n_cols=len(relations), smooth_primes=tuple(smooth_primes)
    )


def nullspace_gf2(matrix: RelationMatrix) -> list[tuple[int, ...]]:
    """Basis of the right nullspace over GF(2), zero vector excluded.

    Gaussian elimination with the first nonzero row as pivot, so output is
    deterministic.
    """
    rows = list(matrix.rows)
    n = matrix.n_cols
    pivot_col_of_row: dict[int, int] = {}
    pivot_cols: list[int] = []
    for col in range(n):
        pivot_row = None
        for r in range(len(rows)):
            if r not in pivot_col_of_row and (rows[r] >> col) & 1:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        for r in range(len(rows)):
            if r != pivot_row and (rows[r] >> col) & 1:
                rows[r] ^= rows[pivot_row]
        pivot_col_of_row[pivot_row] = col
        pivot_cols.append(col)
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [0] * n
        vec[free] = 1
        for r, pc in pivot_col_of_row.items():
            if (rows[r] >> free) & 1:
                vec[pc] = 1
        basis.append(tuple(vec))
    return basis


def matvec_gf2(matrix: RelationMatrix, t: Sequence[int]) -> tuple[int, ...]:
    mask = 0
    for j, bit in enumerate(t):
        if bit & 1:
            mask |= 1 << j
    return tuple(bin(row & mask).count("1") & 1 for row in matrix.rows)


def extract_factors(
    selection: Sequence[int], relations: Sequence[SmoothRelation], N: int
) -> FactorResult:
    """Turn an even-parity subset of relations into a factor attempt."""
    chosen = [rel for bit, rel in zip(selection, relations) if bit]
    if not chosen:
        return FactorResult(status="all-trivial", selection=tuple(selection))
    U = 1
    W = 1
    for rel in chosen:
        U *= rel.pair.u
        W *= rel.pair.u - rel.pair.v * N
    if W <= 0:
        raise InternalInconsistency(
            "product of residues is not positive; sign row parity violated"
        )
    square = U * W
    Z = math.isqrt(square)
    if Z * Z != square:
        raise InternalInconsistency(
            "U*W is not a perfect square; even-exponent certificate violated"
        )
    for candidate in (U - Z, U + Z):
        g = math.gcd(candidate % N, N)
        if 1 < g < N:
            p, q = sorted((g, N // g))
            assert p * q == N
            return FactorResult(
                status="found",
                factors=(p, q),
                selection=tuple(selection),
                U=U,
                W=W,
                Z=Z,
            )
    return FactorResult(status="all-trivial", selection=tuple(selection), U=U, W=W, Z=Z)


def solve(relations: Sequence[SmoothRelation], smooth_primes: Sequence[int], N: int) -> FactorResult:
    """Full solve: build the system, walk the nullspace, stop at a split."""
    if not relations:
        return FactorResult(status="no-solution")
    matrix = build_system(relations, smooth_primes)
    vectors = nullspace_gf2(matrix)
    if not vectors:
        return FactorResult(status="no-solution")
    last = None
    for t in vectors:
        result = extract_factors(t, relations, N)
        if result.status == "found":
            return result
        last = result
    return last if last is not None else FactorResult(status="no-solution")
