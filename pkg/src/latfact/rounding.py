"""Round-half-away-from-zero, the single rounding convention of the pipeline.

Both the lattice construction (diagonal entries, log rows) and the
size-reduction / nearest-plane loops round half cases away from zero;
round(0.5) = 1 and round(1.5) = 2 are what make the 3-qubit worked case
come out with diagonal [1, 1, 2].
"""

from __future__ import annotations

from decimal import Decimal, ROUND_HALF_UP, localcontext
from fractions import Fraction


def round_half_away(x: Fraction) -> int:
    """Round an exact rational to the nearest integer, halves away from zero."""
    if x < 0:
        return -round_half_away(-x)
    n, d = x.numerator, x.denominator
    q, r = divmod(n, d)
    return q + 1 if 2 * r >= d else q


def round_decimal_half_away(x: Decimal) -> int:
    """Round a Decimal to the nearest integer, halves away from zero."""
    with localcontext() as ctx:
        ctx.rounding = ROUND_HALF_UP
        if x < 0:
            return -int((-x).to_integral_value(rounding=ROUND_HALF_UP))
        return int(x.to_integral_value(rounding=ROUND_HALF_UP))
