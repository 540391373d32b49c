"""Dzyaloshinskii-Moriya (DM) perturbation of the switch.

The DM term ``dz * (X_A Y_B - Y_A X_B)`` couples ``|01>`` and ``|10>`` of the
A, B pair and acts as the identity on C. Together with ``t * H_qs`` the
generator restricted to ``(|011>, |101>)`` is ``[[0, t + 2i dz], [t - 2i dz, 0]]``
whose square is ``omega^2 * I`` with ``omega = sqrt(t^2 + 4 dz^2)``, so

    exp(-i G) = cos(omega) I - i sinc(omega) G.

The coefficients ``xi, eta, zeta`` below are the entries of that block. The
hyperbolic form with ``gamma = sqrt(-4 dz^2 - t^2)`` is the same expression
under ``gamma = i * omega``; evaluating it through ``cos``/``sinc`` keeps
everything real-valued until the final complex multiply.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import PAULI_I, PAULI_X, PAULI_Y, exp_minus_i
from .switch import SwitchRegister, _check_register, build_h_qs

SINC_SERIES_CUTOFF = 1e-6
# |010>, |100>: the DM coupling with C = 0
IDLE_PAIR = (2, 4)
SWAP_PAIR = (3, 5)


def sinc(x: float) -> float:
    """Unnormalized ``sin(x)/x`` with ``sinc(0) = 1``."""
    if abs(x) < SINC_SERIES_CUTOFF:
        return 1.0 - x * x / 6.0
    return float(np.sin(x) / x)


@dataclass(frozen=True)
class NoiseParams:
    dz: float
    t: float
    omega: float
    xi: complex
    eta: complex
    zeta: complex

    @property
    def gamma(self) -> complex:
        """``sqrt(-4 dz^2 - t^2)`` on the principal branch, equal to ``i * omega``."""
        return 1j * self.omega

    @property
    def block(self) -> np.ndarray:
        """Action on amplitudes at indices (3, 5): rows give the new amplitudes."""
        return np.array([[self.xi, self.zeta], [self.eta, self.xi]], dtype=complex)


def dm_coefficients(t: float, dz: float) -> NoiseParams:
    omega = float(np.hypot(t, 2.0 * dz))
    sc = sinc(omega)
    return NoiseParams(
        dz=float(dz),
        t=float(t),
        omega=omega,
        xi=complex(np.cos(omega)),
        eta=-(2.0 * dz + 1j * t) * sc,
        zeta=(2.0 * dz - 1j * t) * sc,
    )


def dm_coefficients_hyperbolic(t: float, dz: float) -> tuple[complex, complex, complex]:
    """``(xi, eta, zeta)`` evaluated literally through ``exp(+-gamma)``.

    Undefined at ``t = dz = 0`` (division by ``gamma = 0``); used as a cross-check.
    """
    g = np.sqrt(complex(-4.0 * dz**2 - t**2))
    ep, em = np.exp(g), np.exp(-g)
    xi = 0.5 * em + 0.5 * ep
    eta = ep * (-2 * dz - 1j * t) / (2 * g) - em * (-2 * dz - 1j * t) / (2 * g)
    zeta = ep * (2 * dz - 1j * t) / (2 * g) - em * (2 * dz - 1j * t) / (2 * g)
    return complex(xi), complex(eta), complex(zeta)


def dm_pair_operator() -> np.ndarray:
    """``X (x) Y - Y (x) X`` on qubits A, B (4x4)."""
    return np.kron(PAULI_X, PAULI_Y) - np.kron(PAULI_Y, PAULI_X)


def build_h_dm(dz: float) -> np.ndarray:
    """8x8 DM Hamiltonian, already scaled by ``dz``."""
    return dz * np.kron(dm_pair_operator(), PAULI_I)


def h_total(t: float, dz: float) -> np.ndarray:
    return t * build_h_qs() + build_h_dm(dz)


def u_qs_dm(t: float, dz: float) -> np.ndarray:
    """Noisy switch unitary from the eigendecomposition of the combined generator."""
    return exp_minus_i(h_total(t, dz), 1.0)


def evolve_dm(reg: SwitchRegister, t: float, dz: float) -> SwitchRegister:
    """Closed-form action of ``u_qs_dm(t, dz)`` on a register."""
    reg = _check_register(reg)
    amps = np.array(reg.amplitudes)
    on = dm_coefficients(t, dz)
    amps[list(SWAP_PAIR)] = on.block @ amps[list(SWAP_PAIR)]
    # with C = 0 only the DM term acts
    if dz != 0.0:
        off = dm_coefficients(0.0, dz)
        amps[list(IDLE_PAIR)] = off.block @ amps[list(IDLE_PAIR)]
    return SwitchRegister(amps, reg.time + t)
