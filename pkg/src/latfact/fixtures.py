"""Versioned JSON fixture format for cross-implementation exchange.

Matrices are row-major lists of ints; big integers (N, u, v) travel as
decimal strings so any consumer can parse them losslessly. Output bytes
are stable for identical payloads (sorted keys, fixed separators).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

SCHEMA_VERSION = 1


def fixture_payload(
    N: int,
    basis_rows: list[list[int]],
    target: list[int],
    diagonal: list[int],
    delta: Fraction,
    reduced_rows: list[list[int]] | None = None,
    b_op: list[int] | None = None,
    relations: list[dict] | None = None,
    expected_b_op: list[int] | None = None,
    brute_force_dist_sq: int | None = None,
) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "N": str(N),
        "basis": basis_rows,
        "target": target,
        "diagonal": diagonal,
        "delta": f"{delta.numerator}/{delta.denominator}",
    }
    if reduced_rows is not None:
        payload["reduced_basis"] = reduced_rows
    if b_op is not None:
        payload["b_op"] = b_op
    if relations is not None:
        payload["relations"] = relations
    if expected_b_op is not None:
        payload["expected_b_op"] = expected_b_op
    if brute_force_dist_sq is not None:
        payload["brute_force_dist_sq"] = brute_force_dist_sq
    return payload


def dump_json(payload: dict[str, Any], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return path


def load_fixture(path: str | Path) -> dict[str, Any]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported fixture schema {payload.get('schema')!r}")
    return payload


def parse_delta(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(text)
