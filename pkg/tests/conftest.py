from __future__ import annotations

from fractions import Fraction

import pytest

from latfact.fixtures import dump_json, fixture_payload
from latfact.reduction import Basis

# The 3-qubit worked case: N = 1961, l = 1, c = 1.5, diagonal [1, 1, 2].
CASE_N = 1961
CASE_DIAGONAL = [1, 1, 2]
CASE_BASIS_ROWS = [[1, 0, 0], [0, 1, 0], [0, 0, 2], [22, 35, 51]]
CASE_TARGET = [0, 0, 0, 240]

# Output of the in-house reduction loop on that basis.
CASE_REDUCED_ROWS = [[1, -3, -4], [-2, 2, 1], [2, 0, 2], [3, 4, -2]]

# Output of the reference (external) reduction, used as a fixture; Babai on
# this basis hits (0, 4, 4, 242).
CASE_REFERENCE_ROWS = [[1, -4, -3], [-2, 1, 2], [2, 2, 0], [3, -2, 4]]
CASE_B_OP = [0, 4, 4, 242]

# Energy table for the reference-basis case, index = x1 x2 x3 binary.
CASE_ENERGIES = (36, 97, 77, 150, 66, 137, 91, 174)


@pytest.fixture
def case_basis() -> Basis:
    return Basis.from_rows(CASE_BASIS_ROWS)


@pytest.fixture
def reference_fixture_path(tmp_path):
    payload = fixture_payload(
        N=CASE_N,
        basis_rows=CASE_BASIS_ROWS,
        target=CASE_TARGET,
        diagonal=CASE_DIAGONAL,
        delta=Fraction(3, 4),
        reduced_rows=CASE_REFERENCE_ROWS,
    )
    return str(dump_json(payload, tmp_path / "reference.json"))
