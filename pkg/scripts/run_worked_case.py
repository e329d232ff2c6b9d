#!/usr/bin/env python3
"""Reproduce the 3-qubit worked case end to end.

Runs N = 1961 (c = 1.5, diagonal [1, 1, 2], smooth bound 15) twice: once
with the reference reduction injected as a fixture (factors 37 x 53) and
once with the internal reduction loop (no factors). Pass --solver vqe to
use the simulated eigensolver instead of exact enumeration.
"""

from __future__ import annotations

import argparse
import tempfile
from fractions import Fraction
from pathlib import Path

from latfact.fixtures import dump_json, fixture_payload
from latfact.instance import FactoringInstance
from latfact.ising import DiagonalHamiltonian
from latfact.pipeline import RunConfig, run_pipeline
from latfact.vqe import VqeConfig, optimize, report_table

REFERENCE_REDUCTION = [[1, -4, -3], [-2, 1, 2], [2, 2, 0], [3, -2, 4]]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--solver", choices=("exact", "vqe"), default="exact")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    instance = FactoringInstance(
        N=1961, l=1, c="1.5", smooth_bound=15, seed=args.seed,
        diagonal_override=[1, 1, 2],
    )

    with tempfile.TemporaryDirectory() as tmp:
        fixture = dump_json(
            fixture_payload(
                N=1961,
                basis_rows=[[1, 0, 0], [0, 1, 0], [0, 0, 2], [22, 35, 51]],
                target=[0, 0, 0, 240],
                diagonal=[1, 1, 2],
                delta=Fraction(3, 4),
                reduced_rows=REFERENCE_REDUCTION,
            ),
            Path(tmp) / "reference.json",
        )

        for label, source in [
            ("reference reduction (fixture)", f"fixture:{fixture}"),
            ("internal reduction", "internal"),
        ]:
            report = run_pipeline(
                RunConfig(instance=instance, reduction_source=source, solver=args.solver)
            )
            round0 = report.rounds[0]
            print(f"--- {label} ---")
            print(f"reduced basis rows: {round0['reduced_basis']}")
            print(f"b_op = {round0['b_op']}, dist^2 = {round0['dist_sq']}")
            print(f"energies: {round0['energies']}")
            print(f"selection: {round0['solver']['selection']}")
            print(f"uv-pairs: {round0['uv_pairs']}, sr-pairs: "
                  f"{[(r['u'], r['v']) for r in round0['sr_pairs']]}")
            print(f"result: {report.status} {report.factors or ''}")
            if report.certificate:
                print(f"certificate: {report.certificate}")
            if label.startswith("reference"):
                h = DiagonalHamiltonian(energies=tuple(round0["energies"]))
                outcome = optimize(h, VqeConfig(depth=2, restarts=10, seed=args.seed))
                print("VQE probability table (selection, value, probability):")
                for row in report_table(outcome, h, decimals=4):
                    print(f"  {row[0]}  {row[1]:4d}  {row[2]}")
            print()


if __name__ == "__main__":
    main()
