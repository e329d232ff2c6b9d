"""Replay reduction/Babai fixtures through fpylll and compare at the
invariant level.

Reduced bases are not unique, so the comparison never demands bitwise
equality of bases: both must pass the delta-LLL conditions and span the
same lattice. When the fixture carries an explicit expected Babai point,
the oracle's point must match it exactly. If fpylll is not installed the
verdict is the explicit status "oracle-missing", never a silent pass.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .checks import columns, dist_sq, is_delta_lll_reduced, parse_delta, same_lattice

try:
    import fpylll

    FPYLLL_VERSION: Optional[str] = getattr(fpylll, "__version__", "unknown")
except ImportError:
    fpylll = None
    FPYLLL_VERSION = None

SCHEMA_VERSION = 1


@dataclass
class ComparisonReport:
    fixture: str
    verdict: str  # "pass" | "fail" | "oracle-missing"
    oracle_version: Optional[str] = None
    oracle_reduced_basis: Optional[list[list[int]]] = None
    oracle_b_op: Optional[list[int]] = None
    oracle_lll_ok: Optional[bool] = None
    primary_lll_ok: Optional[bool] = None
    same_lattice: Optional[bool] = None
    oracle_dist_sq: Optional[int] = None
    primary_dist_sq: Optional[int] = None
    expected_b_op_match: Optional[bool] = None
    notes: Optional[str] = None


def _oracle_reduce_and_babai(basis_rows, target):
    """fpylll uses rows as basis vectors, so transpose in and out."""
    cols = columns(basis_rows)
    a = fpylll.IntegerMatrix.from_matrix(cols)
    fpylll.LLL.reduction(a)
    reduced_cols = [[a[i, j] for j in range(a.ncols)] for i in range(a.nrows)]
    reduced_rows = [
        [reduced_cols[j][i] for j in range(len(reduced_cols))]
        for i in range(len(reduced_cols[0]))
    ]
    b_op = list(fpylll.CVP.babai(a, tuple(target)))
    return reduced_rows, b_op


def replay_fixture(path: str | Path) -> ComparisonReport:
    path = Path(path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    if payload.get("schema") != SCHEMA_VERSION:
        return ComparisonReport(
            fixture=path.name, verdict="fail", notes=f"unsupported schema {payload.get('schema')!r}"
        )
    if fpylll is None:
        return ComparisonReport(
            fixture=path.name,
            verdict="oracle-missing",
            notes="fpylll is not installed; no comparison performed",
        )

    basis_rows = payload["basis"]
    target = payload["target"]
    delta = parse_delta(payload.get("delta", "3/4"))
    reduced_rows, b_op = _oracle_reduce_and_babai(basis_rows, target)

    oracle_ok = is_delta_lll_reduced(reduced_rows, delta)
    report = ComparisonReport(
        fixture=path.name,
        verdict="pass",
        oracle_version=FPYLLL_VERSION,
        oracle_reduced_basis=reduced_rows,
        oracle_b_op=b_op,
        oracle_lll_ok=oracle_ok,
        oracle_dist_sq=dist_sq(b_op, target),
    )
    ok = oracle_ok and same_lattice(basis_rows, reduced_rows)
    report.same_lattice = same_lattice(basis_rows, reduced_rows)

    if "reduced_basis" in payload:
        primary_rows = payload["reduced_basis"]
        report.primary_lll_ok = is_delta_lll_reduced(primary_rows, delta)
        report.same_lattice = report.same_lattice and same_lattice(
            primary_rows, reduced_rows
        )
        ok = ok and report.primary_lll_ok and report.same_lattice
    if "b_op" in payload:
        report.primary_dist_sq = dist_sq(payload["b_op"], target)
    if "expected_b_op" in payload:
        report.expected_b_op_match = b_op == list(payload["expected_b_op"])
        ok = ok and report.expected_b_op_match
    if "brute_force_dist_sq" in payload:
        n = len(basis_rows[0])
        bound = (2**n) * payload["brute_force_dist_sq"]
        ok = ok and report.oracle_dist_sq <= bound
        if report.primary_dist_sq is not None:
            ok = ok and report.primary_dist_sq <= bound

    report.verdict = "pass" if ok else "fail"
    return report


def write_report(report: ComparisonReport, fixture_path: str | Path) -> Path:
    out = Path(fixture_path).with_suffix(".report.json")
    out.write_text(json.dumps(asdict(report), sort_keys=True, indent=2) + "\n")
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="oracle-harness",
        description="Replay every fixture in a directory through fpylll.",
    )
    parser.add_argument("fixture_dir", type=Path)
    args = parser.parse_args(argv)
    fixtures = sorted(
        p for p in args.fixture_dir.glob("*.json") if not p.name.endswith(".report.json")
    )
    if not fixtures:
        print(f"no fixtures found in {args.fixture_dir}", file=sys.stderr)
        return 1
    verdicts: dict[str, int] = {}
    for path in fixtures:
        report = replay_fixture(path)
        write_report(report, path)
        verdicts[report.verdict] = verdicts.get(report.verdict, 0) + 1
        print(f"{path.name}: {report.verdict}")
    print(f"summary: {verdicts}")
    return 0 if verdicts.get("fail", 0) == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
