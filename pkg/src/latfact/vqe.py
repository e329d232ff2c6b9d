"""Variational eigensolver over a diagonal Hamiltonian, simulated exactly.

The ansatz is a hardware-efficient stack of Y-rotation layers separated by
linear CNOT chains, so amplitudes stay real; that is enough expressive
power for a Hamiltonian that is diagonal in the computational basis.
Classical optimization is derivative-free (Nelder-Mead) with independent
seeded restarts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .ising import DiagonalHamiltonian, index_to_bits

NORM_TOL = 1e-10


@dataclass(frozen=True)
class Ansatz:
    n_qubits: int
    depth: int = 2

    def __post_init__(self):
        if self.n_qubits < 1 or self.depth < 0:
            raise ValueError("need n_qubits >= 1 and depth >= 0")

    @property
    def parameter_count(self) -> int:
        return self.n_qubits * (self.depth + 1)


@dataclass(frozen=True)
class VqeConfig:
    depth: int = 2
    max_iterations: int = 500
    restarts: int = 5
    seed: int = 0
    tolerance: float = 1e-8
    shots: Optional[int] = None  # None = exact probabilities

    def __post_init__(self):
        if min(self.depth, self.max_iterations, self.restarts) < 0 or self.restarts == 0:
            raise ValueError("depth, max_iterations, restarts must be positive")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class VqeOutcome:
    best_params: tuple[float, ...]
    best_expectation: float
    probability_table: dict[str, float]
    argmax_bitstring: str
    per_restart_log: tuple[tuple[int, float], ...]
    converged: bool


def apply_ansatz(ansatz: Ansatz, params: np.ndarray) -> np.ndarray:
    """State prepared by the rotation/entangler stack; axis i of the
    reshaped tensor is bit x_{i+1} (most significant first)."""
    params = np.asarray(params, dtype=float)
    if params.size != ansatz.parameter_count:
        raise ValueError(
            f"expected {ansatz.parameter_count} parameters, got {params.size}"
        )
    n = ansatz.n_qubits
    state = np.zeros(1 << n)
    state[0] = 1.0
    thetas = params.reshape(ansatz.depth + 1, n)

    def rotate_layer(state, layer):
        psi = state.reshape([2] * n)
        for q in range(n):
            half = layer[q] / 2.0
            c, s = math.cos(half), math.sin(half)
            psi = np.moveaxis(psi, q, 0)
            a, b = psi[0].copy(), psi[1].copy()
            psi = np.stack([c * a - s * b, s * a + c * b])
            psi = np.moveaxis(psi, 0, q)
        return psi.reshape(-1)

    def entangle(state):
        psi = state.reshape([2] * n)
        for q in range(n - 1):
            # CNOT with control q, target q+1
            psi = np.moveaxis(psi, (q, q + 1), (0, 1))
            psi = np.stack([psi[0], psi[1, ::-1]])
            psi = np.moveaxis(psi, (0, 1), (q, q + 1))
        return psi.reshape(-1)

    state = rotate_layer(state, thetas[0])
    for layer in range(1, ansatz.depth + 1):
        if n > 1:
            state = entangle(state)
        state = rotate_layer(state, thetas[layer])
    norm = float(np.dot(state, state))
    assert abs(norm - 1.0) < NORM_TOL, f"state norm drifted to {norm}"
    return state


def expectation(state: np.ndarray, h: DiagonalHamiltonian) -> float:
    if state.size != len(h.energies):
        raise ValueError(f"state dim {state.size} != table size {len(h.energies)}")
    probs = np.abs(state) ** 2
    return float(probs @ np.asarray(h.energies, dtype=float))


def _bitstring(index: int, n: int) -> str:
    return "".join(str(b) for b in index_to_bits(index, n))


def optimize(h: DiagonalHamiltonian, config: VqeConfig) -> VqeOutcome:
    """Minimize the energy over ansatz parameters with seeded restarts.

    Restart r draws its initial point from a child stream of the master
    seed, so runs are reproducible and restarts could execute in parallel;
    the winner is the lowest final expectation, ties by restart index.
    """
    n = h.n
    ansatz = Ansatz(n_qubits=n, depth=config.depth)
    ground = min(h.energies)

    def objective(params):
        value = expectation(apply_ansatz(ansatz, params), h)
        # variational bound; a violation means the simulator is broken
        assert value >= ground - 1e-7, f"expectation {value} below ground {ground}"
        return value

    children = np.random.SeedSequence(config.seed).spawn(config.restarts)
    best: Optional[tuple[float, int, np.ndarray, bool]] = None
    log = []
    for r, child in enumerate(children):
        rng = np.random.Generator(np.random.Philox(child))
        x0 = rng.uniform(-math.pi, math.pi, size=ansatz.parameter_count)
        result = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": config.max_iterations,
                "fatol": config.tolerance,
                "xatol": 1e-6,
            },
        )
        log.append((r, float(result.fun)))
        if best is None or result.fun < best[0]:
            best = (float(result.fun), r, np.asarray(result.x), bool(result.success))

    assert best is not None
    _, _, params, converged = best
    state = apply_ansatz(ansatz, params)
    probs = np.abs(state) ** 2
    if config.shots is not None:
        rng = np.random.Generator(np.random.Philox(key=config.seed ^ 0x5B075))
        counts = rng.multinomial(config.shots, probs / probs.sum())
        probs = counts / config.shots
    table = {_bitstring(i, n): float(p) for i, p in enumerate(probs)}
    argmax = max(range(len(probs)), key=lambda i: (probs[i], -i))
    return VqeOutcome(
        best_params=tuple(float(p) for p in params),
        best_expectation=float(best[0]),
        probability_table=table,
        argmax_bitstring=_bitstring(argmax, n),
        per_restart_log=tuple(log),
        converged=converged,
    )


def report_table(
    outcome: VqeOutcome, h: DiagonalHamiltonian, decimals: int = 4
) -> list[tuple[str, int, float]]:
    """(selection, energy, probability) rows, most probable first."""
    n = h.n
    rows = [
        (_bitstring(i, n), h.energies[i], outcome.probability_table[_bitstring(i, n)])
        for i in range(len(h.energies))
    ]
    rows.sort(key=lambda row: (-row[2], row[0]))
    return [(sel, val, round(prob, decimals)) for sel, val, prob in rows]
