"""Lattice-based integer factoring with a simulated variational eigensolver.

Pipeline: build an integer CVP instance from N, LLL-reduce it, take
Babai's approximate closest vector, refine the selection with a VQE (or
exact enumeration) over the induced diagonal Hamiltonian, harvest smooth
relation pairs, and extract factors through a GF(2) congruence of squares.
"""

from .instance import (
    CvpInstance,
    FactoringInstance,
    PrimeBasis,
    build_cvp,
    diagonal_permutation,
    first_primes,
    lattice_dimension,
)
from .reduction import (
    BabaiResult,
    Basis,
    ReductionResult,
    babai_nearest_plane,
    brute_force_cvp,
    gram_schmidt,
    is_lll_reduced,
    lll_reduce,
)
from .ising import (
    DiagonalHamiltonian,
    QuboProblem,
    build_hamiltonian,
    cost_function,
    exact_ground_state,
)
from .vqe import Ansatz, VqeConfig, VqeOutcome, apply_ansatz, expectation, optimize, report_table
from .relations import (
    SmoothRelation,
    UvPair,
    check_sr_pair,
    collect_candidates,
    extract_exponents,
    smooth_factor,
    vector_to_uv,
)
from .gf2 import FactorResult, RelationMatrix, build_system, extract_factors, nullspace_gf2
from .pipeline import RunConfig, RunReport, run_pipeline

__version__ = "0.1.0"
