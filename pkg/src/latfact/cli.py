"""Command-line entry point for the factoring pipeline.

Exit codes: 0 factored, 2 not factored, 1 error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import LatFactError
from .fixtures import parse_delta
from .instance import FactoringInstance
from .pipeline import RunConfig, RunReport, run_pipeline
from .vqe import VqeConfig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latfact",
        description="Factor an integer via lattice CVP, a simulated "
        "variational eigensolver, and a congruence of squares.",
    )
    parser.add_argument("--N", type=int, required=True, help="odd composite to factor")
    parser.add_argument("--l", type=int, default=1, choices=(1, 2))
    parser.add_argument("--c", type=str, default="1.5", help="precision parameter c > 0")
    parser.add_argument("--smooth-bound", type=int, default=15)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--diagonal", type=str, default=None, help="explicit diagonal, comma separated"
    )
    parser.add_argument("--delta", type=str, default="3/4", help="LLL delta as a/b")
    parser.add_argument(
        "--reduction",
        type=str,
        default="internal",
        help="'internal' or 'fixture:PATH'",
    )
    parser.add_argument("--solver", choices=("vqe", "exact"), default="exact")
    parser.add_argument("--depth", type=int, default=2)
    parser.add_argument("--iters", type=int, default=500)
    parser.add_argument("--restarts", type=int, default=5)
    parser.add_argument("--shots", type=int, default=None)
    parser.add_argument("--rounds", type=int, default=1)
    parser.add_argument("--selection", choices=("argmax", "all"), default="argmax")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--emit-fixtures", type=str, default=None, metavar="DIR")
    parser.add_argument("--time-budget", type=float, default=None, help="seconds")
    return parser


def _print_table(report: RunReport) -> None:
    for record in report.rounds:
        print(f"round {record['round']}: diagonal {record['diagonal']}")
        print(f"  b_op = {record['b_op']}  dist^2 = {record['dist_sq']}")
        solver = record["solver"]
        print(f"  selection = {solver['selection']} ({solver['kind']})")
        print(f"  uv-pairs: {[tuple(p) for p in record['uv_pairs']]}")
        print(f"  sr-pairs: {[(r['u'], r['v']) for r in record['sr_pairs']]}")
    if report.status == "factored":
        assert report.factors is not None
        p, q = report.factors
        print(f"factored: {p} x {q}")
    else:
        print(f"status: {report.status}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        diagonal = (
            [int(x) for x in args.diagonal.split(",")] if args.diagonal else None
        )
        instance = FactoringInstance(
            N=args.N,
            l=args.l,
            c=args.c,
            smooth_bound=args.smooth_bound,
            seed=args.seed,
            diagonal_override=diagonal,
        )
        config = RunConfig(
            instance=instance,
            delta=parse_delta(args.delta),
            reduction_source=args.reduction,
            solver=args.solver,
            vqe=VqeConfig(
                depth=args.depth,
                max_iterations=args.iters,
                restarts=args.restarts,
                shots=args.shots,
            ),
            max_rounds=args.rounds,
            selection_mode="exhaustive" if args.selection == "all" else "argmax",
            output_format=args.format,
            emit_fixtures=args.emit_fixtures,
            time_budget=args.time_budget,
        )
        report = run_pipeline(config)
    except (LatFactError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(report.to_json())
    else:
        _print_table(report)
    return 0 if report.status == "factored" else 2


if __name__ == "__main__":
    sys.exit(main())
