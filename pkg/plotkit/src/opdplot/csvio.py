"""Readers for the simulator's CSV formats.

plotkit consumes files only; these readers re-state the documented schemas
rather than importing the simulator package.
"""

from __future__ import annotations

from pathlib import Path


class PlotDataError(ValueError):
    """Input file missing, empty, or not matching the declared schema."""


SERIES_HEADER = "step,rho_c,rho_d,rho_a"
SWEEP_HEADER = "b,l,ratio,delta,rho_c,rho_d,rho_a,sd_c,sd_d,sd_a,runs"


def _data_lines(path, header):
    path = Path(path)
    if not path.exists():
        raise PlotDataError(f"{path}: no such file")
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != header:
        raise PlotDataError(f"{path}: expected header {header!r}")
    rows = [line for line in lines[1:] if line.strip()]
    if not rows:
        raise PlotDataError(f"{path}: no data rows")
    return rows


def read_series(path) -> list[dict]:
    """Rows of a fraction time series: step, rho_c, rho_d, rho_a."""
    out = []
    for line in _data_lines(path, SERIES_HEADER):
        parts = line.split(",")
        if len(parts) != 4:
            raise PlotDataError(f"{path}: malformed row {line!r}")
        out.append({"step": int(parts[0]), "rho_c": float(parts[1]),
                    "rho_d": float(parts[2]), "rho_a": float(parts[3])})
    return out


def read_sweep(path) -> list[dict]:
    """Rows of a sweep table keyed by the documented column names."""
    cols = SWEEP_HEADER.split(",")
    out = []
    for line in _data_lines(path, SWEEP_HEADER):
        parts = line.split(",")
        if len(parts) != len(cols):
            raise PlotDataError(f"{path}: malformed row {line!r}")
        row = {c: (int(v) if c == "runs" else float(v))
               for c, v in zip(cols, parts)}
        out.append(row)
    return out
