"""The four figure kinds, rendered from simulator output files.

All renderers draw on the Agg backend with fixed figure geometry and write
PNGs with a pinned metadata block, so identical inputs give identical bytes.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import PlotDataError, read_series, read_sweep
from .ppm import read_ppm

DPI = 150
PNG_METADATA = {"Software": "opdplot"}

STRATEGY_LEGEND = [("cooperators", "#0000ff"), ("defectors", "#ff0000"),
                   ("abstainers", "#00ff00")]


def _save(fig, out_path):
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out_path, dpi=DPI, metadata=PNG_METADATA)
    plt.close(fig)
    return out_path


def plot_amplitude_curves(sweep_csv, out_path, loner=None):
    """Stationary cooperation against the amplitude ratio: one error-bar
    curve per (b, delta) at a fixed loner payoff."""
    rows = read_sweep(sweep_csv)
    if loner is None:
        loner = rows[0]["l"]
    rows = [r for r in rows if r["l"] == loner]
    if not rows:
        raise PlotDataError(f"{sweep_csv}: no rows with l = {loner}")
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    groups = sorted({(r["b"], r["delta"]) for r in rows})
    for b, delta in groups:
        pts = sorted((r["ratio"], r["rho_c"], r["sd_c"])
                     for r in rows if r["b"] == b and r["delta"] == delta)
        x, y, err = zip(*pts)
        ax.errorbar(x, y, yerr=err, marker="o", capsize=2.5,
                    label=f"b={b:g}, delta={delta:g}")
    ax.set_xlabel("link-weight amplitude (increment / delta)")
    ax.set_ylabel("stationary cooperator fraction")
    ax.set_ylim(-0.02, 1.02)
    ax.set_title(f"cooperation vs amplitude, l={loner:g}")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    return _save(fig, out_path)


def plot_timecourse(series_csvs, out_path, labels=None):
    """Cooperator fraction over MC steps (log axis), one curve per series."""
    paths = list(series_csvs)
    if not paths:
        raise PlotDataError("no input series")
    if labels is None:
        labels = [Path(p).parent.name or Path(p).stem for p in paths]
    if len(labels) != len(paths):
        raise PlotDataError("labels must match the number of input series")
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    for path, label in zip(paths, labels):
        rows = read_series(path)
        x = [r["step"] for r in rows if r["step"] >= 1]
        y = [r["rho_c"] for r in rows if r["step"] >= 1]
        if not x:
            raise PlotDataError(f"{path}: series has no steps >= 1")
        ax.plot(x, y, label=str(label), linewidth=1.2)
    ax.set_xscale("log")
    ax.set_xlabel("MC step")
    ax.set_ylabel("cooperator fraction")
    ax.set_ylim(-0.02, 1.02)
    ax.set_title("progress of cooperation")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3, which="both")
    return _save(fig, out_path)


def render_snapshot_montage(ppm_paths, rows, out_path,
                            row_labels=None, col_labels=None):
    """Grid of lattice snapshots, row-major; preserves the snapshot colors."""
    paths = list(ppm_paths)
    if rows < 1 or not paths or len(paths) % rows != 0:
        raise PlotDataError(
            f"montage needs a rows x cols grid; got {len(paths)} images for {rows} rows")
    cols = len(paths) // rows
    if row_labels is not None and len(row_labels) != rows:
        raise PlotDataError("row_labels must match the row count")
    if col_labels is not None and len(col_labels) != cols:
        raise PlotDataError("col_labels must match the column count")
    fig, axes = plt.subplots(rows, cols,
                             figsize=(2.2 * cols, 2.2 * rows), squeeze=False)
    for i, path in enumerate(paths):
        r, c = divmod(i, cols)
        ax = axes[r][c]
        ax.imshow(read_ppm(path), interpolation="nearest")
        ax.set_xticks([])
        ax.set_yticks([])
        if row_labels is not None and c == 0:
            ax.set_ylabel(str(row_labels[r]), fontsize=9)
        if col_labels is not None and r == 0:
            ax.set_title(str(col_labels[c]), fontsize=9)
    return _save(fig, out_path)


# barycentric corners of the ternary triangle (equilateral, unit side)
_CORNERS = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, np.sqrt(3.0) / 2.0]])


def _barycentric_xy(b, l, ratio):
    """Ternary position of a parameter triple: shares of (b - 1, l, ratio)."""
    parts = np.array([b - 1.0, l, ratio], dtype=float)
    total = parts.sum()
    if total <= 0.0:
        return None
    shares = parts / total
    return shares @ _CORNERS


def plot_ternary(sweep_csv, out_path):
    """Three panels (cooperator / defector / abstainer stationary fractions)
    over the (b, l, ratio) grid at fixed delta, placed by normalized shares.
    Points with b=1, l=0, ratio=0 have no defined share and are skipped."""
    rows = read_sweep(sweep_csv)
    deltas = {r["delta"] for r in rows}
    if len(deltas) != 1:
        raise PlotDataError(f"{sweep_csv}: ternary input must fix delta, got {sorted(deltas)}")
    pts, values = [], []
    for r in rows:
        xy = _barycentric_xy(r["b"], r["l"], r["ratio"])
        if xy is not None:
            pts.append(xy)
            values.append((r["rho_c"], r["rho_d"], r["rho_a"]))
    if not pts:
        raise PlotDataError(f"{sweep_csv}: no plottable grid points")
    pts = np.array(pts)
    values = np.array(values)
    fig, axes = plt.subplots(1, 3, figsize=(12.0, 3.9))
    titles = ["cooperators", "defectors", "abstainers"]
    triangle = np.vstack([_CORNERS, _CORNERS[:1]])
    for k, ax in enumerate(axes):
        ax.plot(triangle[:, 0], triangle[:, 1], color="0.3", linewidth=1.0)
        sc = ax.scatter(pts[:, 0], pts[:, 1], c=values[:, k], cmap="viridis",
                        vmin=0.0, vmax=1.0, s=30)
        ax.text(-0.02, -0.04, "b - 1", ha="right", fontsize=9)
        ax.text(1.02, -0.04, "l", ha="left", fontsize=9)
        ax.text(0.5, np.sqrt(3.0) / 2.0 + 0.03, "amplitude", ha="center", fontsize=9)
        ax.set_title(titles[k], fontsize=10)
        ax.set_aspect("equal")
        ax.axis("off")
        fig.colorbar(sc, ax=ax, fraction=0.046)
    fig.suptitle(f"stationary fractions, delta={deltas.pop():g}", fontsize=11)
    return _save(fig, out_path)
