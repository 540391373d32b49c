"""Coherence measures in the standard computational basis.

Two routes are provided for every switch quantity:

* the generic route, which builds the reduced density matrix and applies
  :func:`c_l1` or :func:`c_re`;
* a closed form written directly in the input amplitudes
  (``alpha0, beta0`` for qubit A, ``alpha1, beta1`` for qubit B).

The closed forms are cheap and are what the sweeps use; the generic route is
the reference they are tested against.
"""

from __future__ import annotations

import numpy as np

from .linalg import check_density, von_neumann_entropy
from .noise import dm_coefficients, evolve_dm
from .switch import QubitState, evolve, prepare_register, rho_ab


def c_l1(rho: np.ndarray) -> float:
    """Sum of absolute values of the off-diagonal entries."""
    rho = check_density(rho)
    mag = np.abs(rho)
    return float(mag.sum() - np.trace(mag))


def c_re(rho: np.ndarray) -> float:
    """Relative entropy of coherence ``S(diag(rho)) - S(rho)``, in bits."""
    rho = check_density(rho)
    dephased = np.diag(np.diag(rho))
    return max(0.0, von_neumann_entropy(dephased) - von_neumann_entropy(rho))


# generic route --------------------------------------------------------------


def switched_rho_ab(a: QubitState, b: QubitState, t: float, dz: float = 0.0) -> np.ndarray:
    """Reduced A, B state after running the switch on ``|A B 1>``."""
    reg = prepare_register(a, b, 1)
    reg = evolve(reg, t) if dz == 0.0 else evolve_dm(reg, t, dz)
    return rho_ab(reg)


def generic_l1(a: QubitState, b: QubitState, t: float, dz: float = 0.0) -> float:
    return c_l1(switched_rho_ab(a, b, t, dz))


def generic_re(a: QubitState, b: QubitState, t: float, dz: float = 0.0) -> float:
    return c_re(switched_rho_ab(a, b, t, dz))


# closed forms ---------------------------------------------------------------


def _swapped_amplitudes(a: QubitState, b: QubitState, t: float):
    a0, b0, a1, b1 = a.alpha, a.beta, b.alpha, b.beta
    c, s = np.cos(t), np.sin(t)
    return c * a0 * b1 - 1j * s * a1 * b0, c * a1 * b0 - 1j * s * a0 * b1


def c_l1_switch(a: QubitState, b: QubitState, t: float) -> float:
    a0, b0, a1, b1 = a.alpha, a.beta, b.alpha, b.beta
    u, v = _swapped_amplitudes(a, b, t)
    return float(
        2
        * (
            abs(a0 * a1 * b0 * b1)
            + abs(a0 * a1 * u)
            + abs(b0 * b1 * u)
            + (abs(a0 * a1) + abs(b0 * b1) + abs(u)) * abs(v)
        )
    )


def c_l1_a0(a: QubitState, t: float) -> float:
    """``c_l1_switch`` with qubit B fixed to ``|0>``."""
    a0, b0 = a.alpha, a.beta
    s, c = np.sin(t), np.cos(t)
    return float(2 * abs(s * a0 * b0) + 2 * abs(c * a0 * b0) + 2 * abs(c * s * b0**2))


def c_l1_a0_bound(t: float, eps: float = 0.0) -> float:
    """State-independent bound on :func:`c_l1_a0` as stated for the switch.

    Not tight, and not always valid: see :func:`c_l1_a0_sup`.
    """
    if eps < 0:
        raise ValueError("eps must be non-negative")
    s, c = abs(np.sin(t)), abs(np.cos(t))
    return float(eps + s + c + c * s)


def c_l1_a0_sup(t: float) -> float:
    """Exact supremum of :func:`c_l1_a0` over all input states at time ``t``.

    With ``p = |beta0|^2`` the value is ``2 sqrt(p(1-p)) S + 2 p P`` for
    ``S = |sin t| + |cos t|`` and ``P = |sin t cos t|``; maximizing over ``p``
    gives ``sqrt(S^2 + P^2) + P``.
    """
    s, c = abs(np.sin(t)), abs(np.cos(t))
    big_s, big_p = s + c, s * c
    return float(np.hypot(big_s, big_p) + big_p)


def c_l1_aa(a: QubitState) -> float:
    """``c_l1_switch(a, a, t)``, which does not depend on ``t``."""
    a0, b0 = a.alpha, a.beta
    x = abs(a0 * b0)
    return float(4 * x * (abs(a0) ** 2 + x + abs(b0) ** 2))


def _xlog2x(x: float) -> float:
    return 0.0 if x <= 0.0 else x * np.log2(x)


def c_re_aa(a: QubitState) -> float:
    """Relative entropy of coherence of the switched ``|A A 1>``; time independent."""
    pa, pb = abs(a.alpha) ** 2, abs(a.beta) ** 2
    # |a|^4 log|a| = |a|^2 log(|a|^2) * |a|^2 / 2
    val = -2 * (_xlog2x(pa * pb) + pa * _xlog2x(pa) + pb * _xlog2x(pb))
    return max(0.0, float(val))


def _dm_amplitudes(a: QubitState, b: QubitState, t: float, dz: float):
    a0, b0, a1, b1 = a.alpha, a.beta, b.alpha, b.beta
    p = dm_coefficients(t, dz)
    # index 3 (|011>) and index 5 (|101>) after the noisy evolution
    u = p.zeta * a1 * b0 + p.xi * a0 * b1
    v = p.xi * a1 * b0 + p.eta * a0 * b1
    return u, v


def c_l1_switch_dm(a: QubitState, b: QubitState, t: float, dz: float) -> float:
    a0, b0, a1, b1 = a.alpha, a.beta, b.alpha, b.beta
    u, v = _dm_amplitudes(a, b, t, dz)
    return float(
        2 * abs(v * u)
        + 2 * abs(a0 * a1 * u)
        + 2 * abs(b0 * b1 * u)
        + 2 * abs(a0 * a1 * v)
        + 2 * abs(b0 * b1 * v)
        + 2 * abs(a0 * a1 * b0 * b1)
    )


def c_delta(a: QubitState, b: QubitState, t: float, dz: float) -> float:
    """Signed drop in l1 coherence caused by the DM term (noiseless minus noisy)."""
    return c_l1_switch(a, b, t) - c_l1_switch_dm(a, b, t, dz)


def c_delta_abs(a: QubitState, b: QubitState, t: float, dz: float) -> float:
    return abs(c_delta(a, b, t, dz))


def c_delta_closed(a: QubitState, b: QubitState, t: float, dz: float) -> float:
    """Single-expression form of :func:`c_delta`.

    The shared ``|alpha0 alpha1 beta0 beta1|`` term cancels, and the product of
    the two noiseless swap amplitudes is written through ``exp(4it)``.
    """
    a0, b0, a1, b1 = a.alpha, a.beta, b.alpha, b.beta
    u_dm, v_dm = _dm_amplitudes(a, b, t, dz)
    u, v = _swapped_amplitudes(a, b, t)
    outer = abs(a0 * a1) + abs(b0 * b1)
    cross = abs((a1 * b0 + a0 * b1) ** 2 - np.exp(4j * t) * (a1 * b0 - a0 * b1) ** 2)
    return float(
        -2 * abs(u_dm) * (abs(v_dm) + outer)
        - 2 * outer * abs(v_dm)
        + 0.5 * cross
        + 2 * outer * (abs(u) + abs(v))
    )

