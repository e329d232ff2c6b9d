"""Exception types shared across the factoring pipeline."""

from __future__ import annotations


class LatFactError(Exception):
    """Base class for pipeline errors."""


class InstanceRejected(LatFactError):
    """The number to factor fails a precondition (too small, even, prime...)."""


class InvalidOverride(LatFactError):
    """An explicit diagonal is not a permutation of the required multiset."""


class RankDeficient(LatFactError):
    """Basis columns are linearly dependent."""


class IterationCapExceeded(LatFactError):
    """LLL at delta = 1 exceeded its iteration budget."""


class OracleTooLarge(LatFactError):
    """Brute-force CVP search space exceeds the safety cap."""


class NotALatticeVector(LatFactError):
    """A vector does not decompose exactly over the diagonal rows."""


class CapacityError(LatFactError):
    """Energy table would exceed the supported qubit count."""


class InternalInconsistency(LatFactError):
    """An invariant that the pipeline guarantees was violated (a bug)."""


class StageError(LatFactError):
    """Wraps a failure with the pipeline stage and round where it happened."""

    def __init__(self, stage: str, round_index: int, cause: Exception):
        super().__init__(f"stage {stage!r} failed in round {round_index}: {cause}")
        self.stage = stage
        self.round_index = round_index
        self.cause = cause
