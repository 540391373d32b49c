import numpy as np
import pytest

from qswitch.switch import QubitState

# filled by test_acceptance; printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20181)


def random_qubit(rng) -> QubitState:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return QubitState.normalized(*v)


def random_real_qubit(rng) -> QubitState:
    return QubitState.from_angle(rng.uniform(0, 2 * np.pi))


def random_density(rng, d: int, rank: int | None = None) -> np.ndarray:
    rank = d if rank is None else rank
    g = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def random_hermitian(rng, d: int) -> np.ndarray:
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (g + g.conj().T) / 2


def random_diagonal_density(rng, d: int) -> np.ndarray:
    p = rng.random(d)
    return np.diag(p / p.sum()).astype(complex)


# independent oracles --------------------------------------------------------


def kron_loops(a, b):
    """Tensor product by explicit index arithmetic."""
    m, n = a.shape[0], b.shape[0]
    out = np.zeros((m * n, m * n), dtype=complex)
    for i in range(m):
        for j in range(m):
            for k in range(n):
                for l in range(n):
                    out[i * n + k, j * n + l] = a[i, j] * b[k, l]
    return out


def expm_series(a, terms: int = 60, squarings: int = 8):
    """``exp(a)`` by Taylor series with scaling and squaring."""
    a = a / 2**squarings
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ a / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def partial_trace_loops(rho, dims, keep):
    """Reduced density matrix by summing over every basis index of the traced part."""
    n = len(dims)
    keep = sorted(keep)
    traced = [i for i in range(n) if i not in keep]
    kdims = [dims[i] for i in keep]
    tdims = [dims[i] for i in traced]
    dk = int(np.prod(kdims)) if keep else 1
    out = np.zeros((dk, dk), dtype=complex)

    def full_index(kidx, tidx):
        digits = [0] * n
        for pos, i in enumerate(keep):
            digits[i] = kidx[pos]
        for pos, i in enumerate(traced):
            digits[i] = tidx[pos]
        return int(np.ravel_multi_index(digits, dims))

    for r in np.ndindex(*kdims) if keep else [()]:
        for c in np.ndindex(*kdims) if keep else [()]:
            total = 0
            for tr in np.ndindex(*tdims) if traced else [()]:
                total += rho[full_index(r, tr), full_index(c, tr)]
            ri = int(np.ravel_multi_index(r, kdims)) if keep else 0
            ci = int(np.ravel_multi_index(c, kdims)) if keep else 0
            out[ri, ci] = total
    return out


def entropy_bits(p):
    p = np.asarray([x for x in p if x > 0])
    return float(-np.sum(p * np.log2(p)))
