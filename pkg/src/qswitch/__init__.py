"""Quantum switch simulation: coherence measures, DM noise and swap-test estimation."""

from .coherence import (
    c_delta,
    c_delta_abs,
    c_delta_closed,
    c_l1,
    c_l1_a0,
    c_l1_a0_bound,
    c_l1_a0_sup,
    c_l1_aa,
    c_l1_switch,
    c_l1_switch_dm,
    c_re,
    c_re_aa,
    generic_l1,
    generic_re,
    switched_rho_ab,
)
from .errors import DimensionMismatch, InvalidSpec, NotDensity, NotHermitian, NotNormalized
from .estimator import (
    EstimationSchedule,
    OverlapEstimate,
    estimate_over_schedule,
    swap_test_exact,
    swap_test_sampled,
)
from .linalg import dagger, eig_hermitian, exp_minus_i, kron, partial_trace, von_neumann_entropy
from .noise import NoiseParams, build_h_dm, dm_coefficients, evolve_dm, u_qs_dm
from .switch import (
    EXAMPLE_A,
    EXAMPLE_B,
    ONE,
    PLUS,
    ZERO,
    QubitState,
    SwitchRegister,
    build_h_qs,
    evolve,
    prepare_register,
    rho_ab,
    switch_permutation,
    u_qs,
    u_qs_hat,
)
from .sweep import SweepRow, SweepSpec, preset, run_sweep, write_csv

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "EXAMPLE_A",
    "EXAMPLE_B",
    "EstimationSchedule",
    "InvalidSpec",
    "NoiseParams",
    "NotDensity",
    "NotHermitian",
    "NotNormalized",
    "ONE",
    "OverlapEstimate",
    "PLUS",
    "QubitState",
    "SweepRow",
    "SweepSpec",
    "SwitchRegister",
    "ZERO",
    "build_h_dm",
    "build_h_qs",
    "c_delta",
    "c_delta_abs",
    "c_delta_closed",
    "c_l1",
    "c_l1_a0",
    "c_l1_a0_bound",
    "c_l1_a0_sup",
    "c_l1_aa",
    "c_l1_switch",
    "c_l1_switch_dm",
    "c_re",
    "c_re_aa",
    "dagger",
    "dm_coefficients",
    "eig_hermitian",
    "estimate_over_schedule",
    "evolve",
    "evolve_dm",
    "exp_minus_i",
    "generic_l1",
    "generic_re",
    "kron",
    "partial_trace",
    "prepare_register",
    "preset",
    "rho_ab",
    "run_sweep",
    "swap_test_exact",
    "swap_test_sampled",
    "switch_permutation",
    "switched_rho_ab",
    "u_qs",
    "u_qs_dm",
    "u_qs_hat",
    "von_neumann_entropy",
    "write_csv",
]
