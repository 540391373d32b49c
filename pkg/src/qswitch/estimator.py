"""Swap-test estimation of the overlap ``Tr[rho_A rho_B]`` during switching.

The circuit is: ancilla ``|0>``, Hadamard, controlled-SWAP between the two
registers, Hadamard, measure the ancilla. Simulated on the density-operator
level so mixed marginals are handled directly; ``P(0) = (1 + Tr[rho_A rho_B]) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch
from .linalg import check_density
from .noise import evolve_dm
from .switch import QubitState, evolve, prepare_register, rho_a, rho_b

DEFAULT_TIMES = (0.0, np.pi / 6, np.pi / 3, np.pi / 2)
_SNAP = 1e-12

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


@dataclass(frozen=True)
class OverlapEstimate:
    p0: float
    overlap: float
    shots: int = 0
    std_error: float = 0.0


@dataclass(frozen=True)
class EstimationSchedule:
    times: tuple[float, ...] = DEFAULT_TIMES
    shots: int = 0
    seed: int = 0

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        if not times:
            raise ValueError("schedule needs at least one time")
        if not all(np.isfinite(times)):
            raise ValueError("schedule times must be finite")
        if self.shots < 0:
            raise ValueError("shots must be non-negative")
        object.__setattr__(self, "times", times)


def swap_operator(d: int) -> np.ndarray:
    """SWAP on ``C^d (x) C^d``."""
    s = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            s[j * d + i, i * d + j] = 1.0
    return s


def swap_test_circuit(d: int) -> np.ndarray:
    """Full circuit unitary on ancilla (x) register (x) register."""
    n = d * d
    cswap = np.zeros((2 * n, 2 * n), dtype=complex)
    cswap[:n, :n] = np.eye(n)
    cswap[n:, n:] = swap_operator(d)
    h = np.kron(HADAMARD, np.eye(n))
    return h @ cswap @ h


def _validate_pair(rho_a, rho_b):
    rho_a, rho_b = check_density(rho_a), check_density(rho_b)
    if rho_a.shape != rho_b.shape:
        raise DimensionMismatch(f"swap test needs equal dimensions, got {rho_a.shape} and {rho_b.shape}")
    return rho_a, rho_b


def _snap(p: float) -> float:
    p = min(1.0, max(0.0, p))
    if p < _SNAP:
        return 0.0
    if p > 1.0 - _SNAP:
        return 1.0
    return p


def circuit_p0(rho_a: np.ndarray, rho_b: np.ndarray) -> float:
    """Ancilla-0 probability from evolving the full circuit state."""
    rho_a, rho_b = _validate_pair(rho_a, rho_b)
    d = rho_a.shape[0]
    anc = np.zeros((2, 2), dtype=complex)
    anc[0, 0] = 1.0
    state = np.kron(anc, np.kron(rho_a, rho_b))
    u = swap_test_circuit(d)
    out = u @ state @ u.conj().T
    n = d * d
    return float(np.trace(out[:n, :n]).real)


def swap_test_exact(rho_a: np.ndarray, rho_b: np.ndarray) -> OverlapEstimate:
    p0 = _snap(circuit_p0(rho_a, rho_b))
    return OverlapEstimate(p0=p0, overlap=2 * p0 - 1, shots=0, std_error=0.0)


def swap_test_sampled(rho_a, rho_b, shots: int, seed=None) -> OverlapEstimate:
    """Finite-shot estimate; ``seed`` is anything :func:`numpy.random.default_rng` accepts.

    Uses numpy's PCG64 generator, so a fixed seed reproduces the estimate.
    """
    if shots < 1:
        raise ValueError("shots must be at least 1")
    exact = swap_test_exact(rho_a, rho_b)
    rng = np.random.default_rng(seed)
    zeros = int(rng.binomial(shots, exact.p0))
    p0 = zeros / shots
    return OverlapEstimate(
        p0=p0,
        overlap=2 * p0 - 1,
        shots=int(shots),
        std_error=2 * float(np.sqrt(p0 * (1 - p0) / shots)),
    )


def marginals_at(a: QubitState, b: QubitState, t: float, dz: float = 0.0):
    reg = prepare_register(a, b, 1)
    reg = evolve(reg, t) if dz == 0.0 else evolve_dm(reg, t, dz)
    return rho_a(reg), rho_b(reg)


def estimate_at(a: QubitState, b: QubitState, t: float, dz: float = 0.0, shots: int = 0, seed=None) -> OverlapEstimate:
    ra, rb = marginals_at(a, b, t, dz)
    if shots == 0:
        return swap_test_exact(ra, rb)
    return swap_test_sampled(ra, rb, shots, seed)


def estimate_over_schedule(
    a: QubitState, b: QubitState, schedule: EstimationSchedule, dz: float = 0.0
) -> list[OverlapEstimate]:
    """One swap-test estimate of the single-qubit marginals per scheduled time.

    Each time point draws from its own child of ``SeedSequence(schedule.seed)``.
    """
    seeds: Sequence = np.random.SeedSequence(schedule.seed).spawn(len(schedule.times))
    return [
        estimate_at(a, b, t, dz, schedule.shots, seeds[i])
        for i, t in enumerate(schedule.times)
    ]
