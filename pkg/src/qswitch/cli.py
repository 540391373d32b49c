"""Command-line driver for figure sweeps.

Example:
  qswitch-sweep --figure 2b --out f2b.csv
  qswitch-sweep --figure custom --measure overlap --shots 10000 --seed 7 --out ov.csv
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .errors import InvalidSpec
from .sweep import (
    DEFAULT_STEPS,
    HALF_PI,
    MEASURES,
    PRESET_NOTES,
    PRESETS,
    SweepSpec,
    figure_ids,
    format_csv,
    preset,
    run_sweep,
)

EXIT_OK, EXIT_IO, EXIT_INVALID = 0, 1, 2

# config key -> (parser, argparse dest)
CONFIG_KEYS = {
    "figure": (str, "figure"),
    "measure": (str, "measure"),
    "states": (str, "states"),
    "dz": (float, "dz"),
    "t-steps": (int, "t_steps"),
    "a-steps": (int, "a_steps"),
    "t-start": (float, "t_start"),
    "t-stop": (float, "t_stop"),
    "a-start": (float, "a_start"),
    "a-stop": (float, "a_stop"),
    "shots": (int, "shots"),
    "seed": (int, "seed"),
    "out": (str, "out"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qswitch-sweep", description="Sweep coherence of the quantum switch and write CSV.")
    p.add_argument("--figure", help="preset id (%s)" % ", ".join(figure_ids()))
    p.add_argument("--measure", help="measure for custom sweeps (%s)" % ", ".join(MEASURES))
    p.add_argument("--states", choices=("fixed", "param"), help="example states or the sin/cos family over a")
    p.add_argument("--dz", type=float, help="DM intensity; overrides the preset")
    p.add_argument("--t-steps", type=int)
    p.add_argument("--a-steps", type=int)
    p.add_argument("--t-start", type=float)
    p.add_argument("--t-stop", type=float)
    p.add_argument("--a-start", type=float)
    p.add_argument("--a-stop", type=float)
    p.add_argument("--shots", type=int, help="swap-test shots for the overlap measure (0 = exact)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="output CSV path, '-' for stdout")
    p.add_argument("--config", help="file of key=value lines; command-line flags take precedence")
    p.add_argument("--list-figures", action="store_true", help="print the figure presets and exit")
    return p


def read_config(path) -> dict:
    """Parse ``key=value`` lines; ``#`` starts a comment. Raises InvalidSpec on bad entries."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidSpec("config", f"line {lineno}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("_", "-")
        if key not in CONFIG_KEYS:
            raise InvalidSpec("config", f"line {lineno}: unknown key {key!r}")
        conv, dest = CONFIG_KEYS[key]
        try:
            values[dest] = conv(val)
        except ValueError:
            raise InvalidSpec(key, f"cannot parse {val!r}") from None
    return values


def spec_from_options(opts: dict) -> SweepSpec:
    figure = opts.get("figure") or "custom"
    t_steps = opts.get("t_steps") or DEFAULT_STEPS
    a_steps = opts.get("a_steps") or DEFAULT_STEPS
    if figure == "custom":
        parametrized = opts.get("states") == "param"
        spec = SweepSpec(
            figure_id="custom",
            t_range=(0.0, HALF_PI, t_steps),
            a_range=(0.0, HALF_PI, a_steps) if parametrized else None,
            measure=opts.get("measure") or ("overlap" if opts.get("shots") else "l1"),
        )
    else:
        if figure not in PRESETS:
            raise InvalidSpec("figure", f"unknown figure {figure!r}; choose from {', '.join(figure_ids())}")
        if opts.get("measure") or opts.get("states"):
            raise InvalidSpec("figure", "--measure and --states only apply to --figure custom")
        spec = preset(figure, t_steps, a_steps)

    t0, t1, _ = spec.t_range
    changes = {"t_range": (opts.get("t_start", t0), opts.get("t_stop", t1), t_steps)}
    if spec.a_range is not None:
        a0, a1, _ = spec.a_range
        changes["a_range"] = (opts.get("a_start", a0), opts.get("a_stop", a1), a_steps)
    for key in ("dz", "shots", "seed"):
        if opts.get(key) is not None:
            changes[key] = opts[key]
    changes["output_path"] = opts.get("out") or f"fig{spec.figure_id}.csv"
    return replace(spec, **changes).validate()


def list_figures() -> str:
    lines = []
    for fid, (measure, dz, param) in PRESETS.items():
        lines.append(f"{fid}  measure={measure} dz={dz:g} states={'param' if param else 'fixed'}  {PRESET_NOTES[fid]}")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.list_figures:
        print(list_figures())
        return EXIT_OK

    try:
        opts = read_config(args.config) if args.config else {}
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvalidSpec as exc:
        print(f"error: invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    opts.update({k: v for k, v in vars(args).items() if v is not None and k not in ("config", "list_figures")})

    try:
        spec = spec_from_options(opts)
        rows = run_sweep(spec)
    except InvalidSpec as exc:
        print(f"error: invalid spec: {exc}", file=sys.stderr)
        return EXIT_INVALID

    text = format_csv(rows)
    if spec.output_path == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(spec.output_path).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {spec.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {spec.output_path}", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
