"""Parameter sweeps over (t, a, dz) that regenerate the figure data as CSV."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .coherence import c_delta_abs, c_l1_switch, c_l1_switch_dm, generic_re
from .errors import InvalidSpec
from .estimator import estimate_at
from .switch import EXAMPLE_A, EXAMPLE_B, QubitState

HALF_PI = math.pi / 2
DEFAULT_STEPS = 101
MEASURES = ("l1", "re", "delta", "overlap")
CSV_HEADER = ("t", "a", "dz", "measure", "value")


@dataclass(frozen=True)
class SweepSpec:
    """One sweep. ``a_range=None`` means the fixed example states are used."""

    figure_id: str = "custom"
    t_range: tuple[float, float, int] = (0.0, HALF_PI, DEFAULT_STEPS)
    a_range: tuple[float, float, int] | None = None
    dz: float = 0.0
    measure: str = "l1"
    output_path: str | None = None
    shots: int = 0
    seed: int = 0

    def validate(self) -> SweepSpec:
        if self.figure_id not in PRESETS and self.figure_id != "custom":
            raise InvalidSpec("figure_id", f"unknown figure {self.figure_id!r}; choose from {', '.join(figure_ids())}")
        if self.measure not in MEASURES:
            raise InvalidSpec("measure", f"unknown measure {self.measure!r}; choose from {', '.join(MEASURES)}")
        _check_range("t_range", self.t_range)
        if self.a_range is not None:
            _check_range("a_range", self.a_range)
        if not math.isfinite(self.dz) or self.dz < 0:
            raise InvalidSpec("dz", f"must be a finite non-negative number, got {self.dz}")
        if self.shots < 0:
            raise InvalidSpec("shots", f"must be non-negative, got {self.shots}")
        if self.shots and self.measure != "overlap":
            raise InvalidSpec("shots", "sampling only applies to the overlap measure")
        return self


def _check_range(name: str, rng) -> None:
    try:
        start, stop, steps = rng
    except (TypeError, ValueError):
        raise InvalidSpec(name, "expected (start, stop, steps)") from None
    if int(steps) != steps or steps < 2:
        raise InvalidSpec(name, f"steps must be an integer >= 2, got {steps}")
    if not (math.isfinite(start) and math.isfinite(stop)) or not start < stop:
        raise InvalidSpec(name, f"need finite start < stop, got {start}, {stop}")


@dataclass(frozen=True)
class SweepRow:
    t: float
    a: float | None
    value: float
    measure: str
    dz: float


# figure id -> (measure, dz, parametrized states)
PRESETS: dict[str, tuple[str, float, bool]] = {
    "2a": ("l1", 0.0, False),
    "2b": ("l1", 0.0, True),
    "2c": ("l1", 0.5, False),
    "2d": ("l1", 0.5, True),
    "2e": ("re", 0.0, False),
    "2f": ("re", 0.0, True),
    "2g": ("re", 0.5, False),
    "2h": ("re", 0.5, True),
    "3a": ("delta", 0.5, False),
    "3b": ("delta", 0.5, True),
}

PRESET_NOTES = {
    "2a": "l1 coherence, example states, noiseless",
    "2b": "l1 coherence, sin/cos family over a, noiseless",
    "2c": "l1 coherence, example states, DM dz=0.5",
    "2d": "l1 coherence, sin/cos family over a, DM dz=0.5",
    "2e": "relative entropy coherence, example states, noiseless",
    "2f": "relative entropy coherence, sin/cos family over a, noiseless",
    "2g": "relative entropy coherence, example states, DM dz=0.5",
    "2h": "relative entropy coherence, sin/cos family over a, DM dz=0.5",
    "3a": "|noiseless - noisy| l1 coherence, example states, dz=0.5",
    "3b": "|noiseless - noisy| l1 coherence, sin/cos family over a, dz=0.5",
}


def figure_ids() -> list[str]:
    return [*PRESETS, "custom"]


def preset(figure_id: str, t_steps: int = DEFAULT_STEPS, a_steps: int = DEFAULT_STEPS, **overrides) -> SweepSpec:
    if figure_id not in PRESETS:
        raise InvalidSpec("figure_id", f"unknown figure {figure_id!r}; choose from {', '.join(figure_ids())}")
    measure, dz, parametrized = PRESETS[figure_id]
    spec = SweepSpec(
        figure_id=figure_id,
        t_range=(0.0, HALF_PI, t_steps),
        a_range=(0.0, HALF_PI, a_steps) if parametrized else None,
        dz=dz,
        measure=measure,
    )
    return replace(spec, **overrides).validate()


def states_for(a: float | None) -> tuple[QubitState, QubitState]:
    """Example pair for ``a=None``, otherwise ``sin(a)|0>+cos(a)|1>`` and its complement."""
    if a is None:
        return EXAMPLE_A, EXAMPLE_B
    return QubitState.from_angle(a), QubitState.from_angle(HALF_PI - a)


def evaluate(spec: SweepSpec, t: float, a: float | None, seed=None) -> float:
    qa, qb = states_for(a)
    if spec.measure == "l1":
        if spec.dz == 0.0:
            return c_l1_switch(qa, qb, t)
        return c_l1_switch_dm(qa, qb, t, spec.dz)
    if spec.measure == "re":
        return generic_re(qa, qb, t, spec.dz)
    if spec.measure == "delta":
        return c_delta_abs(qa, qb, t, spec.dz)
    return estimate_at(qa, qb, t, spec.dz, spec.shots, seed).overlap


def grid(rng: tuple[float, float, int]) -> np.ndarray:
    start, stop, steps = rng
    return np.linspace(start, stop, int(steps))


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the spec's measure on its grid, t outer and a inner."""
    spec.validate()
    ts = grid(spec.t_range)
    as_ = [None] if spec.a_range is None else [float(a) for a in grid(spec.a_range)]
    points = [(float(t), a) for t in ts for a in as_]
    seeds = np.random.SeedSequence(spec.seed).spawn(len(points)) if spec.shots else [None] * len(points)
    return [
        SweepRow(t=t, a=a, value=float(evaluate(spec, t, a, seed)), measure=spec.measure, dz=float(spec.dz))
        for (t, a), seed in zip(points, seeds)
    ]


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.12g}"


def format_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow((_fmt(r.t), _fmt(r.a), _fmt(r.dz), r.measure, _fmt(r.value)))
    return buf.getvalue()


def write_csv(rows: list[SweepRow], path) -> None:
    """Write rows under the header ``t,a,dz,measure,value``. Fixed-state rows leave ``a`` empty."""
    if not rows:
        raise ValueError("no rows to write")
    Path(path).write_text(format_csv(rows), encoding="utf-8")
