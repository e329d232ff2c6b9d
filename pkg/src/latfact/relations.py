"""Lattice vectors to uv-pairs, smoothness testing, and relation harvesting.

A lattice vector with exponent coordinates e encodes the pair
u = prod_{e_i > 0} p_i^{e_i}, v = prod_{e_i < 0} p_i^{-e_i}; the pair is a
relation when u - vN also factors completely over the extended prime basis
{-1} union the first smooth_bound primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalInconsistency, NotALatticeVector
from .instance import PrimeBasis
from .ising import index_to_bits
from .reduction import BabaiResult, ReductionResult


@dataclass(frozen=True)
class UvPair:
    u: int
    v: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class SmoothRelation:
    pair: UvPair
    # slot 0 is the sign of u - vN (0 or 1); slot i >= 1 the exponent of
    # the i-th smooth-basis prime in |u - vN|
    residue_exponents: tuple[int, ...]


def extract_exponents(vector: Sequence[int], diagonal: Sequence[int]) -> tuple[int, ...]:
    """Recover the basis coefficients from a lattice vector's diagonal rows."""
    n = len(diagonal)
    if len(vector) != n + 1:
        raise ValueError(f"vector length {len(vector)} != {n + 1}")
    exps = []
    for i, f in enumerate(diagonal):
        q, r = divmod(vector[i], f)
        if r != 0:
            raise NotALatticeVector(
                f"entry {vector[i]} at position {i + 1} is not a multiple of f({i + 1}) = {f}"
            )
        exps.append(q)
    return tuple(exps)


def vector_to_uv(e: Sequence[int], primes: PrimeBasis) -> UvPair:
    """Split an exponent vector into the coprime pair (u, v)."""
    if len(e) != len(primes):
        raise ValueError(f"exponent length {len(e)} != prime count {len(primes)}")
    u = 1
    v = 1
    for exp, p in zip(e, primes.primes):
        if exp > 0:
            u *= p**exp
        elif exp < 0:
            v *= p ** (-exp)
    return UvPair(u=u, v=v, exponents=tuple(int(x) for x in e))


def smooth_factor(m: int, primes: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Trial-divide m over the given primes; None when a cofactor remains."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    exps = []
    for p in primes:
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        exps.append(k)
    return tuple(exps) if m == 1 else None


def check_sr_pair(
    pair: UvPair, N: int, smooth_primes: Sequence[int]
) -> Optional[SmoothRelation]:
    """Test whether u - vN is smooth over {-1} union smooth_primes."""
    diff = pair.u - pair.v * N
    if diff == 0:
        return None
    sign = 1 if diff < 0 else 0
    exps = smooth_factor(abs(diff), smooth_primes)
    if exps is None:
        return None
    return SmoothRelation(pair=pair, residue_exponents=(sign,) + exps)


def selection_to_pair(
    babai: BabaiResult,
    bits: Sequence[int],
    reduction: ReductionResult,
    diagonal: Sequence[int],
    primes: PrimeBasis,
) -> UvPair:
    """uv-pair of b_op shifted by the selected reduced-basis columns."""
    n = reduction.reduced.n
    vector = tuple(
        babai.b_op[i]
        + sum(b * col[i] for b, col in zip(bits, reduction.reduced.columns))
        for i in range(reduction.reduced.ambient_dim)
    )
    try:
        e = extract_exponents(vector, diagonal)
    except NotALatticeVector as exc:
        raise InternalInconsistency(
            f"selection {list(bits)} left the lattice; transform bug? ({exc})"
        ) from exc
    return vector_to_uv(e, primes)


def collect_candidates(
    babai: BabaiResult,
    selections: Sequence[Sequence[int]],
    reduction: ReductionResult,
    diagonal: Sequence[int],
    primes: PrimeBasis,
    N: int,
    smooth_primes: Sequence[int],
) -> tuple[list[UvPair], list[SmoothRelation]]:
    """Pairs and relations for each selection, deduplicated by (u, v)."""
    if not selections:
        raise ValueError("need at least one selection")
    seen: set[tuple[int, int]] = set()
    pairs: list[UvPair] = []
    relations: list[SmoothRelation] = []
    for bits in selections:
        pair = selection_to_pair(babai, bits, reduction, diagonal, primes)
        if (pair.u, pair.v) in seen:
            continue
        seen.add((pair.u, pair.v))
        pairs.append(pair)
        relation = check_sr_pair(pair, N, smooth_primes)
        if relation is not None:
            relations.append(relation)
    return pairs, relations


def all_selections(n: int) -> list[tuple[int, ...]]:
    """Every bitstring of length n, in table index order."""
    return [index_to_bits(i, n) for i in range(1 << n)]
