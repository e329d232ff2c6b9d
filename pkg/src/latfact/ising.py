"""Binary-selection cost around the Babai point, as a diagonal Hamiltonian.

The cost F(x) = ||t - b_op - sum_i x_i b_i||^2 is quadratic in the bits,
so the operator built from sigma_z terms is diagonal in the computational
basis; we store only the 2^n energy table and never materialize a matrix.

Bit convention: x = (x_1, ..., x_n) with x_1 the leftmost printed bit,
stored at index sum_i x_i * 2^(n-i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapacityError

MAX_QUBITS = 20

BIT_CONVENTION = "x1 most significant: index = sum x_i * 2^(n-i)"


@dataclass(frozen=True)
class QuboProblem:
    b_op: tuple[int, ...]
    basis_columns: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]

    def __post_init__(self):
        dim = len(self.target)
        if len(self.b_op) != dim or any(len(c) != dim for c in self.basis_columns):
            raise ValueError("b_op, target and basis columns must share one length")

    @property
    def n(self) -> int:
        return len(self.basis_columns)


@dataclass(frozen=True)
class DiagonalHamiltonian:
    energies: tuple[int, ...]
    bit_convention: str = BIT_CONVENTION

    @property
    def n(self) -> int:
        return (len(self.energies) - 1).bit_length()


def bits_to_index(bits: Sequence[int]) -> int:
    index = 0
    for b in bits:
        index = (index << 1) | (b & 1)
    return index


def index_to_bits(index: int, n: int) -> tuple[int, ...]:
    return tuple((index >> (n - 1 - i)) & 1 for i in range(n))


def cost_function(problem: QuboProblem, x: Sequence[int]) -> int:
    """Exact squared distance from the target to the shifted Babai point."""
    if len(x) != problem.n:
        raise ValueError(f"selection length {len(x)} != {problem.n} qubits")
    offsets = [
        problem.target[i]
        - problem.b_op[i]
        - sum(xi * col[i] for xi, col in zip(x, problem.basis_columns))
        for i in range(len(problem.target))
    ]
    return sum(o * o for o in offsets)


def build_hamiltonian(problem: QuboProblem) -> DiagonalHamiltonian:
    """Tabulate F(x) over all 2^n selections."""
    n = problem.n
    if n > MAX_QUBITS:
        raise CapacityError(f"{n} qubits would need a table of 2^{n} entries")
    energies = tuple(
        cost_function(problem, index_to_bits(i, n)) for i in range(1 << n)
    )
    return DiagonalHamiltonian(energies=energies)


def exact_ground_state(h: DiagonalHamiltonian) -> tuple[tuple[int, ...], int]:
    """Minimal-energy bitstring; ties go to the smallest index."""
    best = min(range(len(h.energies)), key=lambda i: (h.energies[i], i))
    return index_to_bits(best, h.n), h.energies[best]
