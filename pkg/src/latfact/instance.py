"""Factoring instance setup: prime basis, dimension, diagonal, CVP lattice.

The composite N is mapped to a closest-vector problem on an integer
lattice whose first n rows are a diagonal permutation of round(i/2) and
whose last row holds round(10^c * ln p_i); the target vector is zero
except for round(10^c * ln N) in the last slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from typing import Optional, Sequence

import numpy as np
from sympy import isprime, nextprime, perfect_power

from .errors import InstanceRejected, InvalidOverride
from .rounding import round_decimal_half_away

# Working precision for every 10^c * ln(.) evaluation, in decimal digits.
# Well above what a double gives, so entries near a .5 boundary are stable.
LOG_PRECISION_DIGITS = 60


@dataclass(frozen=True)
class FactoringInstance:
    """Everything needed to set up one factoring run."""

    N: int
    l: int = 1
    c: float | str = 1.5
    smooth_bound: int = 15
    seed: int = 0
    diagonal_override: Optional[list[int]] = None

    def __post_init__(self):
        validate_modulus(self.N)
        if self.l not in (1, 2):
            raise InstanceRejected(f"l must be 1 or 2, got {self.l}")
        if Decimal(str(self.c)) <= 0:
            raise InstanceRejected(f"c must be positive, got {self.c}")
        n = lattice_dimension(self.N, self.l)
        if self.smooth_bound < n:
            raise InstanceRejected(
                f"smooth_bound {self.smooth_bound} below lattice dimension {n}"
            )


@dataclass(frozen=True)
class PrimeBasis:
    """The first n primes; -1 plays the role of the zeroth element."""

    primes: tuple[int, ...]
    sign_element: int = -1

    def __post_init__(self):
        if not self.primes or self.primes[0] != 2:
            raise ValueError("prime basis must start at 2")
        prev = 1
        for p in self.primes:
            if p <= prev or not isprime(p):
                raise ValueError(f"bad prime basis entry {p}")
            prev = p

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class CvpInstance:
    """Integer CVP instance: (n+1) x n basis matrix plus length-(n+1) target."""

    basis: tuple[tuple[int, ...], ...]  # row-major, shape (n+1, n)
    target: tuple[int, ...]
    diagonal: tuple[int, ...]
    c: str

    @property
    def n(self) -> int:
        return len(self.diagonal)

    def columns(self) -> list[list[int]]:
        return [[row[j] for row in self.basis] for j in range(self.n)]


def validate_modulus(N: int) -> None:
    """Reject N that the construction cannot handle, each with its own message."""
    if N < 15:
        raise InstanceRejected(f"N must be at least 15, got {N}")
    if N % 2 == 0:
        raise InstanceRejected(f"N must be odd, got even {N}")
    if isprime(N):
        raise InstanceRejected(f"N = {N} is prime, nothing to factor")
    power = perfect_power(N)
    if power and isprime(power[0]):
        raise InstanceRejected(f"N = {N} is a perfect prime power {power[0]}^{power[1]}")


def lattice_dimension(N: int, l: int) -> int:
    """Number of lattice dimensions (= qubits): floor(l * log2 N / log2 log2 N)."""
    if N < 15:
        raise InstanceRejected(f"N must be at least 15, got {N}")
    if l not in (1, 2):
        raise InstanceRejected(f"l must be 1 or 2, got {l}")
    with localcontext() as ctx:
        ctx.prec = LOG_PRECISION_DIGITS
        log2_n = Decimal(N).ln() / Decimal(2).ln()
        n = int((Decimal(l) * log2_n / (log2_n.ln() / Decimal(2).ln())).to_integral_value(rounding="ROUND_FLOOR"))
    if n < 2:
        raise InstanceRejected(f"N = {N} too small: dimension formula gives n = {n}")
    return n


def first_primes(n: int) -> PrimeBasis:
    """The first n primes, ascending."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    primes = []
    p = 1
    while len(primes) < n:
        p = int(nextprime(p))
        primes.append(p)
    return PrimeBasis(primes=tuple(primes))


def _diagonal_multiset(n: int) -> list[int]:
    # round(i/2) half away from zero; i positive so this is (i + 1) // 2
    return [(i + 1) // 2 for i in range(1, n + 1)]


def diagonal_permutation(
    n: int, seed: int, override: Optional[Sequence[int]] = None
) -> list[int]:
    """A seeded random permutation of {round(i/2) : i = 1..n}.

    The override, when given, is validated against the multiset and returned
    verbatim. The generator is counter-based (Philox) so calls are
    reproducible from the seed alone.
    """
    multiset = _diagonal_multiset(n)
    if override is not None:
        if sorted(override) != sorted(multiset):
            raise InvalidOverride(
                f"override {list(override)} is not a permutation of {sorted(multiset)}"
            )
        return list(override)
    rng = np.random.Generator(np.random.Philox(key=seed))
    return [multiset[i] for i in rng.permutation(n)]


def scaled_log(x: int, c: float | str) -> int:
    """round(10^c * ln x), evaluated at LOG_PRECISION_DIGITS digits."""
    with localcontext() as ctx:
        ctx.prec = LOG_PRECISION_DIGITS
        value = Decimal(10) ** Decimal(str(c)) * Decimal(x).ln()
    return round_decimal_half_away(value)


def build_cvp(
    N: int, c: float | str, primes: PrimeBasis, f: Sequence[int]
) -> CvpInstance:
    """Assemble the integer CVP instance for N."""
    n = len(primes)
    if len(f) != n:
        raise ValueError(f"diagonal length {len(f)} != prime count {n}")
    if Decimal(str(c)) <= 0:
        raise ValueError(f"c must be positive, got {c}")
    rows: list[tuple[int, ...]] = []
    for i in range(n):
        row = [0] * n
        row[i] = int(f[i])
        rows.append(tuple(row))
    rows.append(tuple(scaled_log(p, c) for p in primes.primes))
    target = tuple([0] * n + [scaled_log(N, c)])
    return CvpInstance(basis=tuple(rows), target=target, diagonal=tuple(f), c=str(c))
