"""Configuration parsing and all file formats (CSV series/sweeps, PPM snapshots).

Config files are flat UTF-8 ``key = value`` lines; ``#`` starts a comment and
lists are comma-separated.  Unknown keys are rejected with their line number,
as are out-of-range values.  Omitted keys fall back to the full-scale
defaults in DEFAULTS (plus per-subcommand grids in TERNARY_DEFAULTS).

CSV schemas (decimal dot, shortest round-trip float formatting, LF newlines):

    series: step,rho_c,rho_d,rho_a
    sweep:  b,l,ratio,delta,rho_c,rho_d,rho_a,sd_c,sd_d,sd_a,runs

Snapshots are binary P6 portable pixmaps, one pixel per agent in row-major
order, maxval 255, colored cooperator=blue (0,0,255), defector=red
(255,0,0), abstainer=green (0,255,0).
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .dynamics import CoevolutionParams, SimConfig, SimResult
from .experiments import SweepResult, SweepRow, SweepSpec
from .game import GameParams
from .lattice import LatticeConfig, Population
from .metrics import FractionRecord


class ConfigError(ValueError):
    """Malformed or out-of-range configuration input."""


# ---------------------------------------------------------------------------
# config grammar

DEFAULTS = {
    "side": 100,
    "mc_steps": 100_000,
    "measure_window": 1000,
    "seed": 1,
    "b": 1.9,
    "l": 0.6,
    "delta": 0.8,
    "ratio": 0.2,
    "snapshot_steps": (),
    "b_values": (1.18, 1.34, 1.74, 1.9),
    "l_values": (0.0, 0.6),
    "ratio_values": tuple(v / 10 for v in range(11)),
    "delta_values": (0.2, 0.4, 0.8),
    "runs_per_point": 10,
}

# ternary grid default: 11 evenly spaced values per axis, cut to valid ranges
TERNARY_DEFAULTS = {
    "b_values": tuple(v / 10 for v in range(10, 21)),
    "l_values": tuple(v / 10 for v in range(10)),
    "ratio_values": tuple(v / 10 for v in range(11)),
    "delta_values": (0.8,),
}

# the three published time-course amplitudes
TIMECOURSE_DEFAULTS = {"ratio_values": (0.0, 0.2, 1.0)}

DESK_SCALE_OVERRIDES = {"side": 50, "mc_steps": 20_000, "runs_per_point": 5}


def _check_range(name, value, lo, hi, hi_open=False):
    ok = lo <= value < hi if hi_open else lo <= value <= hi
    if not ok:
        bound = f"[{lo}, {hi})" if hi_open else f"[{lo}, {hi}]"
        raise ConfigError(f"{name} = {value!r} outside {bound}")
    return value


def _check_delta(name, value):
    if not 0.0 < value <= 1.0:
        raise ConfigError(f"{name} = {value!r} outside (0, 1]")
    return value


def _parse_float(text):
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"expected a number, got {text!r}") from None


def _parse_int(text):
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"expected an integer, got {text!r}") from None


def _parse_list(text, item_parser):
    items = [p.strip() for p in text.split(",") if p.strip()]
    if not items:
        raise ConfigError(f"expected a comma-separated list, got {text!r}")
    return tuple(item_parser(p) for p in items)


KEY_PARSERS = {
    "side": lambda t: _check_range("side", _parse_int(t), 3, 1 << 15),
    "mc_steps": lambda t: _check_range("mc_steps", _parse_int(t), 0, 1 << 31),
    "measure_window": lambda t: _check_range("measure_window", _parse_int(t), 1, 1 << 31),
    "seed": lambda t: _parse_int(t),
    "b": lambda t: _check_range("b", _parse_float(t), 1.0, 2.0),
    "l": lambda t: _check_range("l", _parse_float(t), 0.0, 1.0, hi_open=True),
    "delta": lambda t: _check_delta("delta", _parse_float(t)),
    "ratio": lambda t: _check_range("ratio", _parse_float(t), 0.0, 1.0),
    "snapshot_steps": lambda t: _parse_list(t, _parse_int),
    "b_values": lambda t: _parse_list(t, lambda v: _check_range("b_values item", _parse_float(v), 1.0, 2.0)),
    "l_values": lambda t: _parse_list(t, lambda v: _check_range("l_values item", _parse_float(v), 0.0, 1.0, hi_open=True)),
    "ratio_values": lambda t: _parse_list(t, lambda v: _check_range("ratio_values item", _parse_float(v), 0.0, 1.0)),
    "delta_values": lambda t: _parse_list(t, lambda v: _check_delta("delta_values item", _parse_float(v))),
    "runs_per_point": lambda t: _check_range("runs_per_point", _parse_int(t), 1, 1 << 20),
}


def parse_config(text: str, defaults: dict | None = None) -> dict:
    """Parse key = value config text into a fully populated settings dict."""
    settings = dict(DEFAULTS)
    if defaults:
        settings.update(defaults)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in KEY_PARSERS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            settings[key] = KEY_PARSERS[key](value)
        except ConfigError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
    return settings


def apply_overrides(settings: dict, overrides: Sequence[str]) -> dict:
    """Apply --set key=value pairs on top of parsed settings."""
    out = dict(settings)
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r}: expected key=value")
        key, _, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if key not in KEY_PARSERS:
            raise ConfigError(f"override: unknown key {key!r}")
        try:
            out[key] = KEY_PARSERS[key](value)
        except ConfigError as exc:
            raise ConfigError(f"override {key!r}: {exc}") from None
    return out


def sim_config_from(settings: dict) -> SimConfig:
    return SimConfig(LatticeConfig(settings["side"]),
                     GameParams(settings["b"], settings["l"]),
                     CoevolutionParams(settings["delta"], settings["ratio"]),
                     settings["mc_steps"], settings["measure_window"],
                     settings["seed"], tuple(settings["snapshot_steps"]))


def sweep_spec_from(settings: dict) -> SweepSpec:
    return SweepSpec(settings["b_values"], settings["l_values"],
                     settings["ratio_values"], settings["delta_values"],
                     settings["runs_per_point"], settings["side"],
                     settings["mc_steps"], settings["measure_window"],
                     settings["seed"])


def canonical_config_text(settings: dict, subcommand: str) -> str:
    """Stable serialization of the effective settings; hashed for output dirs."""
    lines = [f"subcommand = {subcommand}"]
    for key in sorted(settings):
        value = settings[key]
        if isinstance(value, tuple):
            rendered = ", ".join(_fmt(v) for v in value)
        else:
            rendered = _fmt(value)
        lines.append(f"{key} = {rendered}")
    return "\n".join(lines) + "\n"


def param_hash(settings: dict, subcommand: str) -> str:
    digest = hashlib.sha256(canonical_config_text(settings, subcommand).encode())
    return digest.hexdigest()[:12]


# ---------------------------------------------------------------------------
# CSV

def _fmt(value) -> str:
    """Shortest exact decimal form: full round-trip precision for floats."""
    if isinstance(value, (bool,)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


format_value = _fmt

SERIES_HEADER = "step,rho_c,rho_d,rho_a"
SWEEP_HEADER = "b,l,ratio,delta,rho_c,rho_d,rho_a,sd_c,sd_d,sd_a,runs"


def write_fractions_csv(series, path) -> None:
    """Series CSV: one data row per MC step.  `series` is a SimResult or an
    iterable of FractionRecord."""
    path = Path(path)
    lines = [SERIES_HEADER]
    if isinstance(series, SimResult):
        frac = series.fractions
        for t in range(frac.shape[0]):
            lines.append(f"{t},{_fmt(frac[t, 0])},{_fmt(frac[t, 1])},{_fmt(frac[t, 2])}")
    else:
        for r in series:
            lines.append(f"{r.step},{_fmt(r.rho_c)},{_fmt(r.rho_d)},{_fmt(r.rho_a)}")
    _write_text(path, "\n".join(lines) + "\n")


def read_fractions_csv(path) -> list[FractionRecord]:
    path = Path(path)
    lines = _read_lines(path)
    if not lines or lines[0] != SERIES_HEADER:
        raise ValueError(f"{path}: not a fractions series CSV")
    out = []
    for line in lines[1:]:
        step, c, d, a = line.split(",")
        out.append(FractionRecord(int(step), float(c), float(d), float(a)))
    return out


def write_sweep_csv(result: SweepResult | Iterable[SweepRow], path) -> None:
    rows = result.rows if isinstance(result, SweepResult) else result
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(",".join([
            _fmt(r.b), _fmt(r.l), _fmt(r.ratio), _fmt(r.delta),
            _fmt(r.mean[0]), _fmt(r.mean[1]), _fmt(r.mean[2]),
            _fmt(r.stddev[0]), _fmt(r.stddev[1]), _fmt(r.stddev[2]),
            str(r.runs),
        ]))
    _write_text(Path(path), "\n".join(lines) + "\n")


def read_sweep_csv(path) -> list[dict]:
    path = Path(path)
    lines = _read_lines(path)
    if not lines or lines[0] != SWEEP_HEADER:
        raise ValueError(f"{path}: not a sweep CSV")
    cols = SWEEP_HEADER.split(",")
    out = []
    for line in lines[1:]:
        parts = line.split(",")
        row = {c: (int(v) if c == "runs" else float(v)) for c, v in zip(cols, parts)}
        out.append(row)
    return out


def _write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"writing {path}: {exc}") from exc


def _read_lines(path: Path) -> list[str]:
    try:
        return path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise OSError(f"reading {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# PPM snapshots

# strategy -> RGB: cooperator blue, defector red, abstainer green
SNAPSHOT_COLORS = np.array([[0, 0, 255], [255, 0, 0], [0, 255, 0]], dtype=np.uint8)


def write_snapshot_ppm(pop_or_grid, path) -> None:
    """Binary P6 pixmap, one pixel per agent in row-major order."""
    grid = pop_or_grid.grid() if isinstance(pop_or_grid, Population) else np.asarray(pop_or_grid)
    if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
        raise ValueError(f"snapshot grid must be square, got shape {grid.shape}")
    side = grid.shape[0]
    header = f"P6\n{side} {side}\n255\n".encode("ascii")
    payload = SNAPSHOT_COLORS[grid.astype(np.int64)].tobytes()
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(header + payload)
    except OSError as exc:
        raise OSError(f"writing {path}: {exc}") from exc


def read_snapshot_ppm(path) -> np.ndarray:
    """Strategies grid back from a snapshot pixmap."""
    path = Path(path)
    data = path.read_bytes()
    fields, pos = [], 0
    while len(fields) < 4:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        fields.append(data[start:pos])
    pos += 1  # single whitespace after maxval
    if fields[0] != b"P6" or fields[3] != b"255":
        raise ValueError(f"{path}: not a maxval-255 P6 pixmap")
    w, h = int(fields[1]), int(fields[2])
    rgb = np.frombuffer(data[pos:pos + 3 * w * h], dtype=np.uint8).reshape(h, w, 3)
    grid = np.full((h, w), -1, dtype=np.int8)
    for value, color in enumerate(SNAPSHOT_COLORS):
        grid[np.all(rgb == color, axis=-1)] = value
    if (grid < 0).any():
        raise ValueError(f"{path}: pixel colors outside the strategy palette")
    return grid


def snapshot_filename(step: int) -> str:
    return f"snap_{step}.ppm"


def write_run_outputs(result: SimResult, run_dir) -> None:
    """fractions.csv plus snap_<step>.ppm files for one simulation."""
    run_dir = Path(run_dir)
    write_fractions_csv(result, run_dir / "fractions.csv")
    for step, grid in result.snapshots:
        write_snapshot_ppm(grid, run_dir / snapshot_filename(step))
