"""Dense complex-matrix kernel.

Matrices are plain ``numpy`` arrays of ``complex128``. The checks below use
absolute tolerances, scaled by the largest entry when that exceeds one.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionMismatch, NotDensity, NotHermitian

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
# eigenvalues at or below this contribute nothing to the entropy
ENTROPY_CUTOFF = 1e-12

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class Spectrum(NamedTuple):
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _scale(m: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0


def as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {m.shape}")
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = as_matrix(m)
    return bool(np.max(np.abs(m - dagger(m))) <= tol * _scale(m))


def is_unitary(m: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    m = as_matrix(m)
    return bool(np.max(np.abs(dagger(m) @ m - np.eye(m.shape[0]))) <= tol)


def check_density(rho: np.ndarray) -> np.ndarray:
    """Validate ``rho`` as a density operator and return it as a complex array.

    Raises :class:`NotDensity` if it is not Hermitian, not unit trace, or has an
    eigenvalue below ``-PSD_TOL``.
    """
    rho = as_matrix(rho)
    if not is_hermitian(rho):
        raise NotDensity("matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotDensity(f"trace is {tr.real:.15g}, expected 1")
    lo = np.linalg.eigvalsh(rho)[0]
    if lo < -PSD_TOL:
        raise NotDensity(f"minimum eigenvalue {lo:.3g} is negative")
    return rho


def is_density(rho: np.ndarray) -> bool:
    try:
        check_density(rho)
    except (NotDensity, DimensionMismatch):
        return False
    return True


def eig_hermitian(h: np.ndarray) -> Spectrum:
    h = as_matrix(h)
    if not is_hermitian(h):
        raise NotHermitian("eigendecomposition requires a Hermitian matrix")
    w, v = np.linalg.eigh(h)
    return Spectrum(w, v)


def exp_minus_i(h: np.ndarray, s: float) -> np.ndarray:
    """Return ``exp(-i s h)`` for Hermitian ``h`` via its eigendecomposition."""
    w, v = eig_hermitian(h)
    return (v * np.exp(-1j * s * w)) @ dagger(v)


def partial_trace(rho: np.ndarray, dims: Sequence[int], keep) -> np.ndarray:
    """Trace out every subsystem whose index is not in ``keep``.

    Subsystem 0 is the most significant factor of the tensor product. The kept
    subsystems appear in the result in their original order.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims) or int(np.prod(dims)) != rho.shape[0]:
        raise DimensionMismatch(f"subsystem dims {dims} do not multiply to {rho.shape[0]}")
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= len(dims) for k in keep):
        raise DimensionMismatch(f"keep indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    tensor = rho.reshape(dims + dims)
    # row axes 0..n-1, column axes n..2n-1; traced pairs share a label
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    if 2 * n > len(letters):
        raise DimensionMismatch("too many subsystems")
    rows = list(letters[:n])
    cols = [letters[n + i] if i in keep else rows[i] for i in range(n)]
    out = "".join(rows[i] for i in keep) + "".join(cols[i] for i in keep)
    reduced = np.einsum("".join(rows) + "".join(cols) + "->" + out, tensor)
    d = int(np.prod([dims[i] for i in keep])) if keep else 1
    return reduced.reshape(d, d)


def purity(rho: np.ndarray) -> float:
    rho = as_matrix(rho)
    return float(np.real(np.trace(rho @ rho)))


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits."""
    rho = check_density(rho)
    w = np.linalg.eigvalsh(rho)
    w = w[w > ENTROPY_CUTOFF]
    return max(0.0, float(-np.sum(w * np.log2(w))))


def projector(psi) -> np.ndarray:
    """Density matrix ``|psi><psi|`` of a state vector."""
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())
