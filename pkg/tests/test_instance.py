from __future__ import annotations

from decimal import Decimal, localcontext

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latfact.errors import InstanceRejected, InvalidOverride
from latfact.instance import (
    FactoringInstance,
    build_cvp,
    diagonal_permutation,
    first_primes,
    lattice_dimension,
    scaled_log,
    validate_modulus,
)


class TestLatticeDimension:
    @pytest.mark.parametrize(
        "N,l,expected",
        [(1961, 1, 3), (48567227, 1, 5), (1961, 2, 6), (48567227, 2, 10)],
    )
    def test_known_cases(self, N, l, expected):
        assert lattice_dimension(N, l) == expected

    def test_rejects_small_n(self):
        with pytest.raises(InstanceRejected):
            lattice_dimension(15, 1)  # formula gives n = 1

    def test_monotone_in_n(self):
        values = [lattice_dimension(N, 1) for N in range(100, 10**9, 7919 * 791)]
        assert all(a <= b for a, b in zip(values, values[1:]))


class TestFirstPrimes:
    def test_three(self):
        assert first_primes(3).primes == (2, 3, 5)

    def test_one(self):
        assert first_primes(1).primes == (2,)

    def test_five(self):
        assert first_primes(5).primes == (2, 3, 5, 7, 11)

    def test_smooth_bound_primes(self):
        assert first_primes(15).primes[-1] == 47
        assert first_primes(50).primes[-1] == 229


class TestDiagonalPermutation:
    def test_override_verbatim(self):
        assert diagonal_permutation(3, seed=123, override=[1, 1, 2]) == [1, 1, 2]

    def test_singleton(self):
        assert diagonal_permutation(1, seed=99) == [1]

    def test_bad_override(self):
        with pytest.raises(InvalidOverride):
            diagonal_permutation(3, seed=0, override=[1, 2, 2])

    def test_multiset_n4(self):
        assert sorted(diagonal_permutation(4, seed=7)) == [1, 1, 2, 2]

    def test_reproducible(self):
        assert diagonal_permutation(6, seed=11) == diagonal_permutation(6, seed=11)

    def test_thousand_seeds_n6(self):
        for seed in range(1000):
            assert sorted(diagonal_permutation(6, seed=seed)) == [1, 1, 2, 2, 3, 3]


class TestBuildCvp:
    def test_worked_case(self):
        cvp = build_cvp(1961, "1.5", first_primes(3), [1, 1, 2])
        assert list(cvp.basis[3]) == [22, 35, 51]
        assert cvp.target == (0, 0, 0, 240)
        assert cvp.target[:3] == (0, 0, 0)

    def test_large_case_target(self):
        # high-precision oracle: 10^4 * ln(48567227) evaluated at 60 digits
        with localcontext() as ctx:
            ctx.prec = 60
            expected = Decimal(10) ** 4 * Decimal(48567227).ln()
            expected = int(expected.to_integral_value(rounding="ROUND_HALF_UP"))
        cvp = build_cvp(48567227, "4", first_primes(5), [1, 1, 2, 2, 3])
        assert cvp.target[-1] == expected == 176985

    def test_scaled_log_half_away(self):
        # round(10^0 * ln x) sanity near known values
        assert scaled_log(2, "1.5") == 22
        assert scaled_log(3, "1.5") == 35
        assert scaled_log(5, "1.5") == 51

    @given(
        n=st.integers(min_value=2, max_value=8),
        c=st.decimals(min_value="0.5", max_value="5", places=2),
        seed=st.integers(min_value=0, max_value=2**32 - 1),
        N=st.integers(min_value=100, max_value=10**9),
    )
    @settings(max_examples=60, deadline=None)
    def test_invariants_hold(self, n, c, seed, N):
        primes = first_primes(n)
        f = diagonal_permutation(n, seed)
        cvp = build_cvp(N, str(c), primes, f)
        # diagonal rows
        for i in range(n):
            row = cvp.basis[i]
            assert row[i] == f[i] > 0
            assert all(x == 0 for j, x in enumerate(row) if j != i)
        # log row and target
        assert cvp.basis[n] == tuple(scaled_log(p, str(c)) for p in primes.primes)
        assert cvp.target[:-1] == (0,) * n
        assert cvp.target[-1] == scaled_log(N, str(c))
        # full column rank is forced by the positive diagonal rows
        assert all(cvp.basis[i][i] > 0 for i in range(n))


class TestValidation:
    def test_even_rejected(self):
        with pytest.raises(InstanceRejected, match="even"):
            validate_modulus(1962)

    def test_prime_rejected(self):
        with pytest.raises(InstanceRejected, match="prime"):
            validate_modulus(1009)

    def test_prime_power_rejected(self):
        with pytest.raises(InstanceRejected, match="power"):
            validate_modulus(3**7)

    def test_small_rejected(self):
        with pytest.raises(InstanceRejected):
            validate_modulus(9)

    def test_instance_checks_smooth_bound(self):
        with pytest.raises(InstanceRejected, match="smooth_bound"):
            FactoringInstance(N=1961, l=1, smooth_bound=2)

    def test_valid_instance(self):
        inst = FactoringInstance(N=1961, l=1, c="1.5", smooth_bound=15)
        assert inst.N == 1961
