"""Invariant-level checks for lattice fixtures: delta-LLL conditions and
same-lattice comparison. Verification only; no reduction is performed here."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import sympy
from sympy.matrices.normalforms import hermite_normal_form

Matrix = Sequence[Sequence[int]]  # row-major, columns are basis vectors


def columns(rows: Matrix) -> list[list[int]]:
    return [[row[j] for row in rows] for j in range(len(rows[0]))]


def gram_schmidt(cols: list[list[int]]):
    ortho: list[list[Fraction]] = []
    mu: list[list[Fraction]] = []
    for i, col in enumerate(cols):
        vec = [Fraction(x) for x in col]
        coeffs = []
        for j in range(i):
            denom = sum(o * o for o in ortho[j])
            m = sum(Fraction(x) * o for x, o in zip(col, ortho[j])) / denom
            coeffs.append(m)
            vec = [v - m * o for v, o in zip(vec, ortho[j])]
        ortho.append(vec)
        mu.append(coeffs)
    return ortho, mu


def is_delta_lll_reduced(rows: Matrix, delta: Fraction) -> bool:
    cols = columns(rows)
    if len(cols) <= 1:
        return True
    ortho, mu = gram_schmidt(cols)
    norms = [sum(o * o for o in vec) for vec in ortho]
    if any(n == 0 for n in norms):
        return False
    for i in range(1, len(cols)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
        if norms[i] + mu[i][i - 1] ** 2 * norms[i - 1] < delta * norms[i - 1]:
            return False
    return True


def same_lattice(rows_a: Matrix, rows_b: Matrix) -> bool:
    return hermite_normal_form(sympy.Matrix(list(map(list, rows_a)))) == (
        hermite_normal_form(sympy.Matrix(list(map(list, rows_b))))
    )


def dist_sq(vec: Sequence[int], target: Sequence[int]) -> int:
    return sum((a - b) ** 2 for a, b in zip(vec, target))


def parse_delta(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(text)
