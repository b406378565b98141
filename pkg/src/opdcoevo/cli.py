"""Command-line front end.

    opdcoevo run        --config cfg.txt --out results [--set key=value]...
    opdcoevo sweep      --config cfg.txt --out results [--workers N]
    opdcoevo ternary    --config cfg.txt --out results [--desk-scale]
    opdcoevo timecourse --config cfg.txt --out results

Outputs land under <out>/<subcommand>/<paramhash>/ where the hash derives
from the canonical serialization of the effective settings, so identical
configurations map to identical output trees.  Exit code 0 on success,
nonzero with a diagnostic on stderr otherwise.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as cio
from .dynamics import run_simulation
from .experiments import (SNAPSHOT_SCHEDULE, run_amplitude_sweep,
                          run_ternary_sweep, run_timecourse)
from .metrics import stationary_fraction


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opdcoevo",
        description="Optional prisoner's dilemma on a torus with coevolving link weights")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, desc in [
        ("run", "single simulation; writes the fraction series and snapshots"),
        ("sweep", "stationary fractions over a (b, l, ratio, delta) grid"),
        ("ternary", "(b, l, ratio) grid at one fixed delta"),
        ("timecourse", "one full series per amplitude ratio, shared seed"),
    ]:
        p = sub.add_parser(name, help=desc)
        p.add_argument("--config", type=Path, default=None,
                       help="key = value config file (defaults apply when omitted)")
        p.add_argument("--out", type=Path, required=True, help="output directory")
        p.add_argument("--set", dest="overrides", action="append", default=[],
                       metavar="KEY=VALUE", help="override one config key")
        p.add_argument("--workers", type=int, default=1,
                       help="parallel worker processes for sweep points")
        p.add_argument("--desk-scale", action="store_true",
                       help="reduced preset: side=50, mc_steps=20000, 5 runs/point")
    return parser


def _load_settings(args) -> dict:
    text = args.config.read_text(encoding="utf-8") if args.config else ""
    defaults = None
    if args.subcommand == "ternary":
        defaults = cio.TERNARY_DEFAULTS
    elif args.subcommand == "timecourse":
        defaults = cio.TIMECOURSE_DEFAULTS
    settings = cio.parse_config(text, defaults)
    if args.desk_scale:
        settings.update(cio.DESK_SCALE_OVERRIDES)
    return cio.apply_overrides(settings, args.overrides)


def _fractions_line(label, triple) -> str:
    c, d, a = triple
    return f"{label}: rho_c={c:.4f} rho_d={d:.4f} rho_a={a:.4f}"


def _cmd_run(args, settings) -> int:
    cfg = cio.sim_config_from(settings)
    out_dir = args.out / "run" / cio.param_hash(settings, "run")
    (out_dir / "config.txt").parent.mkdir(parents=True, exist_ok=True)
    (out_dir / "config.txt").write_text(
        cio.canonical_config_text(settings, "run"), encoding="utf-8")
    result = run_simulation(cfg)
    cio.write_run_outputs(result, out_dir / "run0")
    stat = stationary_fraction(result, cfg.measure_window)
    print(_fractions_line(f"stationary (window {cfg.measure_window})", stat))
    print(f"outputs: {out_dir}")
    return 0


def _cmd_sweep(args, settings, ternary: bool) -> int:
    name = "ternary" if ternary else "sweep"
    spec = cio.sweep_spec_from(settings)
    runner = run_ternary_sweep if ternary else run_amplitude_sweep
    result = runner(spec, workers=args.workers)
    out_dir = args.out / name / cio.param_hash(settings, name)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "config.txt").write_text(
        cio.canonical_config_text(settings, name), encoding="utf-8")
    cio.write_sweep_csv(result, out_dir / "sweep.csv")
    print(f"{len(result.rows)} grid points x {spec.runs_per_point} runs")
    print(f"outputs: {out_dir}")
    return 0


def _cmd_timecourse(args, settings) -> int:
    if not settings["snapshot_steps"]:
        steps = tuple(s for s in SNAPSHOT_SCHEDULE if s <= settings["mc_steps"])
        if settings["mc_steps"] not in steps:
            steps = steps + (settings["mc_steps"],)
        settings = dict(settings, snapshot_steps=steps)
    cfg = cio.sim_config_from(settings)
    out_dir = args.out / "timecourse" / cio.param_hash(settings, "timecourse")
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "config.txt").write_text(
        cio.canonical_config_text(settings, "timecourse"), encoding="utf-8")
    for ratio, result in run_timecourse(cfg, settings["ratio_values"]):
        run_dir = out_dir / f"ratio_{cio.format_value(ratio)}"
        cio.write_run_outputs(result, run_dir)
        stat = stationary_fraction(result, cfg.measure_window)
        print(_fractions_line(f"ratio {ratio}", stat))
    print(f"outputs: {out_dir}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = _load_settings(args)
        if args.subcommand == "run":
            return _cmd_run(args, settings)
        if args.subcommand in ("sweep", "ternary"):
            return _cmd_sweep(args, settings, ternary=args.subcommand == "ternary")
        if args.subcommand == "timecourse":
            return _cmd_timecourse(args, settings)
        raise AssertionError(args.subcommand)
    except (cio.ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
