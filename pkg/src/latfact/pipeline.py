"""End-to-end orchestration: instance -> reduction -> Hamiltonian ->
selection -> relations -> GF(2) solve, with multi-round relation
accumulation and a fully reproducible seed stream."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import numpy as np
import sympy

from . import gf2, relations as rel
from .errors import LatFactError, StageError
from .fixtures import dump_json, fixture_payload, load_fixture
from .instance import (
    FactoringInstance,
    build_cvp,
    diagonal_permutation,
    first_primes,
    lattice_dimension,
)
from .ising import QuboProblem, build_hamiltonian, exact_ground_state, index_to_bits
from .reduction import Basis, ReductionResult, babai_nearest_plane, lll_reduce
from .vqe import VqeConfig, optimize


@dataclass(frozen=True)
class RunConfig:
    instance: FactoringInstance
    delta: Fraction = Fraction(3, 4)
    reduction_source: str = "internal"  # "internal" or "fixture:<path>"
    solver: str = "exact"  # "exact" or "vqe"
    vqe: VqeConfig = field(default_factory=VqeConfig)
    max_rounds: int = 1
    selection_mode: str = "argmax"  # "argmax" or "exhaustive"
    output_format: str = "table"
    emit_fixtures: Optional[str] = None
    time_budget: Optional[float] = None  # seconds, None = unlimited

    def __post_init__(self):
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")
        if not Fraction(1, 4) < self.delta <= 1:
            raise ValueError(f"delta must be in (1/4, 1], got {self.delta}")
        if self.solver not in ("exact", "vqe"):
            raise ValueError(f"unknown solver {self.solver!r}")
        if self.selection_mode not in ("argmax", "exhaustive"):
            raise ValueError(f"unknown selection mode {self.selection_mode!r}")
        if not (
            self.reduction_source == "internal"
            or self.reduction_source.startswith("fixture:")
        ):
            raise ValueError(f"bad reduction source {self.reduction_source!r}")


@dataclass
class RunReport:
    config: dict[str, Any]
    rounds: list[dict[str, Any]]
    status: str  # "factored" | "not-factored" | "budget-exceeded"
    factors: Optional[tuple[int, int]]
    certificate: Optional[dict[str, Any]]
    timing: dict[str, float]

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        data = {
            "config": self.config,
            "rounds": self.rounds,
            "status": self.status,
            "factors": [str(f) for f in self.factors] if self.factors else None,
            "certificate": self.certificate,
        }
        if include_timing:
            data["timing"] = self.timing
        return data

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)


def _fixture_reduction(path: str, original: Basis) -> ReductionResult:
    """Build a ReductionResult from a fixture's reduced basis, deriving and
    checking the unimodular transform against the original basis."""
    payload = load_fixture(path)
    reduced = Basis.from_rows(payload["reduced_basis"])
    orig_m = sympy.Matrix(original.rows())
    red_m = sympy.Matrix(reduced.rows())
    u = (orig_m.T * orig_m).inv() * orig_m.T * red_m
    n = original.n
    transform = []
    for i in range(n):
        row = []
        for j in range(n):
            value = u[i, j]
            if value != int(value):
                raise LatFactError(
                    f"fixture basis is not an integer transform of the instance basis"
                )
            row.append(int(value))
        transform.append(tuple(row))
    det = int(sympy.Matrix(transform).det())
    if abs(det) != 1:
        raise LatFactError(f"fixture transform has determinant {det}, expected +-1")
    return ReductionResult(
        reduced=reduced, transform=tuple(transform), delta=Fraction(3, 4)
    )


def _round_seed(master: int, round_index: int) -> int:
    child = np.random.SeedSequence(master).spawn(round_index + 1)[round_index]
    return int(child.generate_state(1, dtype=np.uint64)[0])


def run_pipeline(config: RunConfig) -> RunReport:
    inst = config.instance
    started = time.perf_counter()
    timing: dict[str, float] = {}
    n = lattice_dimension(inst.N, inst.l)
    primes = first_primes(n)
    smooth_primes = first_primes(inst.smooth_bound).primes

    all_relations: list[rel.SmoothRelation] = []
    seen_pairs: set[tuple[int, int]] = set()
    rounds: list[dict[str, Any]] = []
    status = "not-factored"
    factors: Optional[tuple[int, int]] = None
    certificate: Optional[dict[str, Any]] = None

    for round_index in range(config.max_rounds):
        if config.time_budget is not None and time.perf_counter() - started > config.time_budget:
            status = "budget-exceeded"
            break
        record: dict[str, Any] = {"round": round_index}
        stage = "primes_lattice"
        try:
            t0 = time.perf_counter()
            override = inst.diagonal_override if round_index == 0 else None
            diagonal = diagonal_permutation(
                n, _round_seed(inst.seed, round_index), override
            )
            cvp = build_cvp(inst.N, inst.c, primes, diagonal)
            basis = Basis.from_rows([list(r) for r in cvp.basis])
            record["diagonal"] = diagonal
            record["basis"] = [list(r) for r in cvp.basis]
            record["target"] = list(cvp.target)
            timing[f"round{round_index}.lattice"] = time.perf_counter() - t0

            stage = "lattice_reduction"
            t0 = time.perf_counter()
            if config.reduction_source == "internal":
                reduction = lll_reduce(basis, config.delta)
            else:
                reduction = _fixture_reduction(
                    config.reduction_source.split(":", 1)[1], basis
                )
            babai = babai_nearest_plane(reduction, cvp.target)
            record["reduced_basis"] = reduction.reduced.rows()
            record["transform"] = [list(r) for r in reduction.transform]
            record["b_op"] = list(babai.b_op)
            record["dist_sq"] = babai.dist_sq
            timing[f"round{round_index}.reduction"] = time.perf_counter() - t0

            stage = "ising"
            t0 = time.perf_counter()
            problem = QuboProblem(
                b_op=babai.b_op,
                basis_columns=reduction.reduced.columns,
                target=cvp.target,
            )
            hamiltonian = build_hamiltonian(problem)
            record["energies"] = list(hamiltonian.energies)
            timing[f"round{round_index}.ising"] = time.perf_counter() - t0

            stage = "solver"
            t0 = time.perf_counter()
            if config.solver == "exact":
                best_bits, best_energy = exact_ground_state(hamiltonian)
                record["solver"] = {
                    "kind": "exact",
                    "selection": "".join(map(str, best_bits)),
                    "energy": best_energy,
                }
            else:
                vqe_config = VqeConfig(
                    depth=config.vqe.depth,
                    max_iterations=config.vqe.max_iterations,
                    restarts=config.vqe.restarts,
                    seed=_round_seed(inst.seed ^ 0xA5E, round_index),
                    tolerance=config.vqe.tolerance,
                    shots=config.vqe.shots,
                )
                outcome = optimize(hamiltonian, vqe_config)
                best_bits = tuple(int(b) for b in outcome.argmax_bitstring)
                record["solver"] = {
                    "kind": "vqe",
                    "selection": outcome.argmax_bitstring,
                    "expectation": outcome.best_expectation,
                    "restarts": [[r, e] for r, e in outcome.per_restart_log],
                    "converged": outcome.converged,
                }
            timing[f"round{round_index}.solver"] = time.perf_counter() - t0

            stage = "relations"
            t0 = time.perf_counter()
            if config.selection_mode == "argmax":
                selections = [best_bits]
            else:
                selections = rel.all_selections(n)
            pairs, found = rel.collect_candidates(
                babai, selections, reduction, diagonal, primes, inst.N, smooth_primes
            )
            record["uv_pairs"] = [[str(p.u), str(p.v)] for p in pairs]
            record["sr_pairs"] = [
                {
                    "u": str(r_.pair.u),
                    "v": str(r_.pair.v),
                    "e": list(r_.pair.exponents),
                    "residue": list(r_.residue_exponents),
                }
                for r_ in found
            ]
            for r_ in found:
                key = (r_.pair.u, r_.pair.v)
                if key not in seen_pairs:
                    seen_pairs.add(key)
                    all_relations.append(r_)
            timing[f"round{round_index}.relations"] = time.perf_counter() - t0

            stage = "gf2_factor"
            t0 = time.perf_counter()
            if all_relations:
                result = gf2.solve(all_relations, smooth_primes, inst.N)
                record["gf2_status"] = result.status
                if result.status == "found":
                    assert result.factors is not None
                    p, q = result.factors
                    assert p * q == inst.N  # re-checked before surfacing
                    factors = (p, q)
                    status = "factored"
                    certificate = {
                        "selection": list(result.selection or ()),
                        "U": str(result.U),
                        "W": str(result.W),
                        "Z": str(result.Z),
                    }
            else:
                record["gf2_status"] = "no-relations"
            timing[f"round{round_index}.gf2"] = time.perf_counter() - t0
        except LatFactError as exc:
            raise StageError(stage, round_index, exc) from exc

        if config.emit_fixtures:
            payload = fixture_payload(
                N=inst.N,
                basis_rows=record["basis"],
                target=record["target"],
                diagonal=record["diagonal"],
                delta=config.delta,
                reduced_rows=record["reduced_basis"],
                b_op=record["b_op"],
                relations=record["sr_pairs"],
            )
            dump_json(
                payload,
                Path(config.emit_fixtures) / f"round_{round_index:03d}.json",
            )

        rounds.append(record)
        if status == "factored":
            break

    timing["total"] = time.perf_counter() - started
    config_echo = {
        "N": str(inst.N),
        "l": inst.l,
        "c": str(inst.c),
        "smooth_bound": inst.smooth_bound,
        "seed": inst.seed,
        "diagonal_override": list(inst.diagonal_override)
        if inst.diagonal_override
        else None,
        "delta": f"{config.delta.numerator}/{config.delta.denominator}",
        "reduction_source": config.reduction_source,
        "solver": config.solver,
        "vqe": {
            "depth": config.vqe.depth,
            "max_iterations": config.vqe.max_iterations,
            "restarts": config.vqe.restarts,
            "tolerance": config.vqe.tolerance,
            "shots": config.vqe.shots,
        },
        "max_rounds": config.max_rounds,
        "selection_mode": config.selection_mode,
    }
    return RunReport(
        config=config_echo,
        rounds=rounds,
        status=status,
        factors=factors,
        certificate=certificate,
        timing=timing,
    )


def export_fixture(stage: str, payload: dict[str, Any], directory: str | Path) -> Path:
    """Write a named fixture; bytes are stable for identical payloads."""
    return dump_json(payload, Path(directory) / f"{stage}.json")
