"""Three-qubit quantum switch: Hamiltonian, unitaries and register evolution.

Basis index of ``|b_A b_B b_C>`` is ``4*b_A + 2*b_B + b_C``; qubit A is the
most significant. The switch acts only on the pair ``|011>``, ``|101>``
(indices 3 and 5), which is where the swap of A and B becomes visible when the
control qubit C is ``|1>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotNormalized
from .linalg import partial_trace, projector

NORM_TOL = 1e-12
DIM = 8
# |011> and |101>
SWAP_PAIR = (3, 5)
# indices with C = 1
CONTROL_ON = (1, 3, 5, 7)


@dataclass(frozen=True)
class QubitState:
    """Pure qubit state ``alpha|0> + beta|1>``."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"|alpha|^2 + |beta|^2 = {norm:.15g}")

    @classmethod
    def from_angle(cls, a: float) -> QubitState:
        """``sin(a)|0> + cos(a)|1>``, the one-parameter family used in sweeps."""
        return cls(np.sin(a), np.cos(a))

    @classmethod
    def normalized(cls, alpha: complex, beta: complex) -> QubitState:
        n = np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if n == 0:
            raise NotNormalized("zero vector cannot be normalized")
        return cls(alpha / n, beta / n)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)


ZERO = QubitState(1, 0)
ONE = QubitState(0, 1)
PLUS = QubitState(1 / np.sqrt(2), 1 / np.sqrt(2))

# fixed example pair used throughout the figures
EXAMPLE_A = QubitState(1 / np.sqrt(10), 3 / np.sqrt(10))
EXAMPLE_B = QubitState(3 / np.sqrt(10), 1 / np.sqrt(10))


def control_bit(value: int) -> int:
    if value not in (0, 1):
        raise ValueError(f"control bit must be 0 or 1, got {value!r}")
    return int(value)


@dataclass(frozen=True, eq=False)
class SwitchRegister:
    """Pure state of qubits (A, B, C) together with the elapsed switch time."""

    amplitudes: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).ravel()
        if amps.shape != (DIM,):
            raise DimensionMismatch(f"register needs {DIM} amplitudes, got {amps.size}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"register norm^2 = {norm:.15g}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "time", float(self.time))

    def __eq__(self, other):
        if not isinstance(other, SwitchRegister):
            return NotImplemented
        return self.time == other.time and np.array_equal(self.amplitudes, other.amplitudes)

    @property
    def density(self) -> np.ndarray:
        return projector(self.amplitudes)


def build_h_qs() -> np.ndarray:
    """``|011><101| + |101><011|``."""
    h = np.zeros((DIM, DIM), dtype=complex)
    i, j = SWAP_PAIR
    h[i, j] = h[j, i] = 1.0
    return h


def _with_block(block: np.ndarray) -> np.ndarray:
    u = np.eye(DIM, dtype=complex)
    u[np.ix_(SWAP_PAIR, SWAP_PAIR)] = block
    return u


def u_qs(t: float) -> np.ndarray:
    """``exp(-i t H_qs)`` in closed form."""
    c, s = np.cos(t), np.sin(t)
    return _with_block(np.array([[c, -1j * s], [-1j * s, c]]))


def u_qs_hat(t: float) -> np.ndarray:
    """Phase-corrected switch unitary: the ``u_qs`` block times ``i``.

    At ``t = pi/2`` this is an exact swap of ``|011>`` and ``|101>`` with no
    residual phase.
    """
    c, s = np.cos(t), np.sin(t)
    return _with_block(np.array([[1j * c, s], [s, 1j * c]]))


def switch_permutation() -> np.ndarray:
    """Controlled-SWAP on (A, B) with control C: ``|AB0> -> |AB0>``, ``|AB1> -> |BA1>``."""
    return _with_block(np.array([[0, 1], [1, 0]]))


def prepare_register(a: QubitState, b: QubitState, c: int = 1) -> SwitchRegister:
    c = control_bit(c)
    ctrl = np.array([1 - c, c], dtype=complex)
    return SwitchRegister(np.kron(np.kron(a.vector, b.vector), ctrl), 0.0)


def _check_register(reg: SwitchRegister) -> SwitchRegister:
    norm = float(np.vdot(reg.amplitudes, reg.amplitudes).real)
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"register norm^2 = {norm:.15g}")
    return reg


def evolve(reg: SwitchRegister, t: float) -> SwitchRegister:
    """Apply ``u_qs(t)``. The returned register's time is advanced by ``t``."""
    reg = _check_register(reg)
    return SwitchRegister(u_qs(t) @ reg.amplitudes, reg.time + t)


def evolve_hat(reg: SwitchRegister, t: float) -> SwitchRegister:
    reg = _check_register(reg)
    return SwitchRegister(u_qs_hat(t) @ reg.amplitudes, reg.time + t)


def density_at(reg: SwitchRegister, t: float) -> np.ndarray:
    """``U(t) |reg><reg| U(t)^dagger`` evolved from ``reg`` itself."""
    u = u_qs(t)
    return u @ reg.density @ u.conj().T


def rho_ab(reg: SwitchRegister) -> np.ndarray:
    """Reduced state of qubits A and B (control traced out)."""
    return partial_trace(reg.density, [2, 2, 2], keep=(0, 1))


def rho_a(reg: SwitchRegister) -> np.ndarray:
    return partial_trace(reg.density, [2, 2, 2], keep=(0,))


def rho_b(reg: SwitchRegister) -> np.ndarray:
    return partial_trace(reg.density, [2, 2, 2], keep=(1,))
