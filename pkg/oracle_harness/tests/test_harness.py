from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from oracle_harness.checks import is_delta_lll_reduced, same_lattice
from oracle_harness.harness import fpylll, main, replay_fixture, write_report

CASE_FIXTURE = {
    "schema": 1,
    "N": "1961",
    "basis": [[1, 0, 0], [0, 1, 0], [0, 0, 2], [22, 35, 51]],
    "target": [0, 0, 0, 240],
    "diagonal": [1, 1, 2],
    "delta": "3/4",
    # the reduction the reference package is known to produce on this input
    "reduced_basis": [[1, -4, -3], [-2, 1, 2], [2, 2, 0], [3, -2, 4]],
    "expected_b_op": [0, 4, 4, 242],
}

needs_oracle = pytest.mark.skipif(fpylll is None, reason="fpylll not installed")


def write_case(tmp_path: Path, payload=None) -> Path:
    path = tmp_path / "case.json"
    path.write_text(json.dumps(payload or CASE_FIXTURE))
    return path


class TestChecks:
    def test_reference_basis_is_reduced(self):
        assert is_delta_lll_reduced(CASE_FIXTURE["reduced_basis"], Fraction(3, 4))

    def test_unreduced_basis_rejected(self):
        assert not is_delta_lll_reduced(CASE_FIXTURE["basis"], Fraction(3, 4))

    def test_same_lattice(self):
        assert same_lattice(CASE_FIXTURE["basis"], CASE_FIXTURE["reduced_basis"])

    def test_different_lattice(self):
        other = [[2, 0, 0], [0, 2, 0], [0, 0, 4], [44, 70, 102]]
        assert not same_lattice(CASE_FIXTURE["basis"], other)


class TestReplayWithoutOracle:
    @pytest.mark.skipif(fpylll is not None, reason="fpylll is installed")
    def test_oracle_missing_is_explicit(self, tmp_path):
        report = replay_fixture(write_case(tmp_path))
        assert report.verdict == "oracle-missing"
        assert report.verdict != "pass"  # never a silent pass

    def test_bad_schema(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"schema": 7}')
        report = replay_fixture(path)
        assert report.verdict == "fail"

    def test_report_written_next_to_fixture(self, tmp_path):
        path = write_case(tmp_path)
        report = replay_fixture(path)
        out = write_report(report, path)
        assert out == tmp_path / "case.report.json"
        assert json.loads(out.read_text())["fixture"] == "case.json"

    def test_batch_cli(self, tmp_path):
        write_case(tmp_path)
        code = main([str(tmp_path)])
        assert code == 0  # oracle-missing is not a failure verdict
        assert (tmp_path / "case.report.json").exists()

    def test_empty_dir(self, tmp_path):
        assert main([str(tmp_path)]) == 1


@needs_oracle
class TestReplayWithOracle:
    def test_worked_case(self, tmp_path):
        report = replay_fixture(write_case(tmp_path))
        assert report.verdict == "pass"
        assert report.oracle_reduced_basis == CASE_FIXTURE["reduced_basis"]
        assert report.oracle_b_op == [0, 4, 4, 242]

    def test_expected_b_op_mismatch_fails(self, tmp_path):
        payload = dict(CASE_FIXTURE)
        payload["expected_b_op"] = [1, 1, 1, 1]
        report = replay_fixture(write_case(tmp_path, payload))
        assert report.verdict == "fail"

    def test_random_fixtures_from_primary_cli(self, tmp_path):
        # the primary is consumed only through its CLI and fixture files
        for seed in range(50):
            out_dir = tmp_path / f"s{seed}"
            subprocess.run(
                [
                    sys.executable, "-m", "latfact.cli",
                    "--N", "1961", "--seed", str(seed),
                    "--solver", "exact", "--emit-fixtures", str(out_dir),
                ],
                check=False,
                capture_output=True,
            )
            for fixture in sorted(out_dir.glob("round_*.json")):
                report = replay_fixture(fixture)
                assert report.verdict == "pass", report
