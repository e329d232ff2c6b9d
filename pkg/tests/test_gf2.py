from __future__ import annotations

import math

import numpy as np
import pytest

from latfact.gf2 import (
    FactorResult,
    RelationMatrix,
    build_system,
    extract_factors,
    matvec_gf2,
    nullspace_gf2,
    solve,
)
from latfact.instance import first_primes
from latfact.relations import UvPair, check_sr_pair, vector_to_uv

SMOOTH_15 = first_primes(15).primes


def worked_relation():
    pair = vector_to_uv((0, 4, 2), first_primes(3))
    relation = check_sr_pair(pair, 1961, SMOOTH_15)
    assert relation is not None
    return relation


class TestBuildSystem:
    def test_worked_relation_gives_zero_column(self):
        # u = 3^4 * 5^2, residue 2^6: combined exponents (6, 4, 2) all even
        matrix = build_system([worked_relation()], SMOOTH_15)
        assert matrix.n_cols == 1
        assert all(row == 0 for row in matrix.rows)

    def test_identical_relations_identical_columns(self):
        rel = worked_relation()
        matrix = build_system([rel, rel], SMOOTH_15)
        for row in matrix.rows:
            assert row in (0, 0b11)

    def test_odd_parity_column(self):
        # u = 2^3 * 3^2 * 5^2, residue -(7 * 23): odd at sign, 2, 7, 23
        pair = vector_to_uv((3, 2, 2), first_primes(3))
        relation = check_sr_pair(pair, 1961, SMOOTH_15)
        matrix = build_system([relation], SMOOTH_15)
        odd_rows = [i for i, row in enumerate(matrix.rows) if row]
        assert odd_rows == [0, 1, SMOOTH_15.index(7) + 1, SMOOTH_15.index(23) + 1]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_system([], SMOOTH_15)


class TestNullspace:
    def test_zero_column(self):
        matrix = RelationMatrix(rows=(0, 0, 0), n_cols=1, smooth_primes=(2, 3))
        assert nullspace_gf2(matrix) == [(1,)]

    def test_full_rank_empty(self):
        matrix = RelationMatrix(rows=(0b01, 0b10), n_cols=2, smooth_primes=(2,))
        assert nullspace_gf2(matrix) == []

    def test_random_matrices_recheck(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            rows = tuple(int(x) for x in rng.integers(0, 1 << 10, size=6))
            matrix = RelationMatrix(rows=rows, n_cols=10, smooth_primes=(2,) * 5)
            vectors = nullspace_gf2(matrix)
            assert len(vectors) >= 10 - 6
            for t in vectors:
                assert any(t)
                assert matvec_gf2(matrix, t) == (0,) * 6

    def test_deterministic(self):
        matrix = RelationMatrix(rows=(0b1011, 0b0110), n_cols=4, smooth_primes=(2,))
        assert nullspace_gf2(matrix) == nullspace_gf2(matrix)


class TestExtractFactors:
    def test_worked_certificate(self):
        result = extract_factors((1,), [worked_relation()], 1961)
        assert result.status == "found"
        assert result.U == 2025
        assert result.W == 64
        assert result.Z == 360
        assert result.factors == (37, 53)
        assert 37 * 53 == 1961

    def test_degenerate_congruence(self):
        # u = 4, v = 1, N = 3: residue 1, so U = 4, W = 1, Z = 2 and both
        # gcd(U -+ Z, N) are trivial
        relation = check_sr_pair(UvPair(u=4, v=1, exponents=(2, 0, 0)), 3, [2, 3])
        assert relation is not None
        result = extract_factors((1,), [relation], 3)
        assert result.status == "all-trivial"

    def test_empty_selection_trivial(self):
        result = extract_factors((0,), [worked_relation()], 1961)
        assert result.status == "all-trivial"

    def test_perfect_square_invariant(self):
        rng = np.random.default_rng(17)
        primes = first_primes(4)
        smooth = first_primes(10).primes
        relations = []
        # harvest genuine relations for N = 77 by scanning exponent vectors
        for _ in range(4000):
            e = [int(x) for x in rng.integers(-4, 5, size=4)]
            pair = vector_to_uv(e, primes)
            rel = check_sr_pair(pair, 77, smooth)
            if rel and (pair.u, pair.v) not in {(r.pair.u, r.pair.v) for r in relations}:
                relations.append(rel)
            if len(relations) >= 12:
                break
        assert len(relations) >= 2
        matrix = build_system(relations, smooth)
        for t in nullspace_gf2(matrix):
            chosen = [r for bit, r in zip(t, relations) if bit]
            U = math.prod(r.pair.u for r in chosen)
            W = math.prod(r.pair.u - r.pair.v * 77 for r in chosen)
            assert W > 0
            assert math.isqrt(U * W) ** 2 == U * W


class TestSolve:
    def test_single_relation_success(self):
        result = solve([worked_relation()], SMOOTH_15, 1961)
        assert result.status == "found"
        assert result.factors == (37, 53)

    def test_no_relations(self):
        assert solve([], SMOOTH_15, 1961).status == "no-solution"

    def test_full_rank_no_solution(self):
        pair = vector_to_uv((3, 2, 2), first_primes(3))
        relation = check_sr_pair(pair, 1961, SMOOTH_15)
        assert solve([relation], SMOOTH_15, 1961).status == "no-solution"
