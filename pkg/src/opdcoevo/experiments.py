"""Experiment harness: parameter sweeps, time courses, snapshot schedules.

Sweeps run a grid of (b, l, ratio, delta) points, each averaged over
runs_per_point independent simulations whose seeds derive deterministically
from (base_seed, point index, run index).  Rows come out in sorted Cartesian
order, independent of worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import NamedTuple, Sequence

from .dynamics import CoevolutionParams, SimConfig, SimResult, run_simulation
from .game import GameParams
from .lattice import LatticeConfig
from .metrics import RunAggregate, RunSummary, aggregate_runs, summarize_run
from .rng import derive_seed

# Full-scale defaults and the reduced preset used by the acceptance suite.
PAPER_SCALE = dict(side=100, mc_steps=100_000, measure_window=1000, runs_per_point=10)
DESK_SCALE = dict(side=50, mc_steps=20_000, measure_window=1000, runs_per_point=5)

SNAPSHOT_SCHEDULE = (0, 45, 1113, 100_000)  # the published snapshot steps


@dataclass(frozen=True)
class SweepSpec:
    b_values: tuple[float, ...]
    l_values: tuple[float, ...]
    ratio_values: tuple[float, ...]
    delta_values: tuple[float, ...]
    runs_per_point: int = 10
    side: int = 100
    mc_steps: int = 100_000
    measure_window: int = 1000
    base_seed: int = 1

    def __post_init__(self):
        for name in ("b_values", "l_values", "ratio_values", "delta_values"):
            vals = tuple(float(v) for v in getattr(self, name))
            if not vals:
                raise ValueError(f"{name} must not be empty")
            object.__setattr__(self, name, vals)
        if self.runs_per_point < 1:
            raise ValueError(f"runs_per_point={self.runs_per_point!r} must be >= 1")
        # validate every grid point's parameter ranges up front (fail fast)
        for b in self.b_values:
            for l in self.l_values:
                GameParams(b, l)
        for delta in self.delta_values:
            for ratio in self.ratio_values:
                CoevolutionParams(delta, ratio)
        LatticeConfig(self.side)

    def points(self) -> list[tuple[float, float, float, float]]:
        """(b, l, ratio, delta) grid in sorted Cartesian order."""
        return list(itertools.product(sorted(set(self.b_values)),
                                      sorted(set(self.l_values)),
                                      sorted(set(self.ratio_values)),
                                      sorted(set(self.delta_values))))

    def config_for(self, b, l, ratio, delta, seed,
                   snapshot_steps=()) -> SimConfig:
        return SimConfig(LatticeConfig(self.side), GameParams(b, l),
                         CoevolutionParams(delta, ratio), self.mc_steps,
                         self.measure_window, seed, snapshot_steps)


@dataclass(frozen=True)
class SweepRow:
    b: float
    l: float
    ratio: float
    delta: float
    mean: tuple[float, float, float]
    stddev: tuple[float, float, float]
    runs: int
    seeds: tuple[int, ...]


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[SweepRow, ...]


def _point_job(args) -> tuple[tuple[int, int], RunSummary]:
    spec, point_idx, run_idx = args
    b, l, ratio, delta = spec.points()[point_idx]
    seed = derive_seed(spec.base_seed, point_idx, run_idx)
    cfg = spec.config_for(b, l, ratio, delta, seed)
    return (point_idx, run_idx), summarize_run(run_simulation(cfg))


def _run_grid(spec: SweepSpec, workers: int = 1) -> SweepResult:
    points = spec.points()
    jobs = [(spec, p, r)
            for p in range(len(points))
            for r in range(spec.runs_per_point)]
    results: dict[tuple[int, int], RunSummary] = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for key, summary in pool.map(_point_job, jobs):
                results[key] = summary
    else:
        for job in jobs:
            key, summary = _point_job(job)
            results[key] = summary

    rows = []
    for p, (b, l, ratio, delta) in enumerate(points):
        agg: RunAggregate = aggregate_runs(
            [results[(p, r)] for r in range(spec.runs_per_point)])
        rows.append(SweepRow(b, l, ratio, delta, agg.mean, agg.stddev,
                             agg.runs, agg.seeds))
    return SweepResult(spec, tuple(rows))


def run_amplitude_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Stationary fractions over the (b, l, ratio, delta) grid; the ratio
    axis is the amplitude being studied."""
    return _run_grid(spec, workers)


def run_ternary_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Three-parameter (b, l, ratio) grid at one fixed delta; rows carry all
    three stationary components."""
    if len(set(spec.delta_values)) != 1:
        raise ValueError("ternary sweep requires exactly one delta value")
    return _run_grid(spec, workers)


class TimecourseRun(NamedTuple):
    ratio: float
    result: SimResult


def run_timecourse(cfg: SimConfig, ratios: Sequence[float]) -> list[TimecourseRun]:
    """One full-series simulation per amplitude ratio, all from the same seed
    so every run starts from the identical random grid (snapshots at step 0
    coincide)."""
    if not ratios:
        raise ValueError("ratios must not be empty")
    out = []
    for ratio in ratios:
        rcfg = replace(cfg, coevo=CoevolutionParams(cfg.coevo.delta, ratio))
        out.append(TimecourseRun(float(ratio), run_simulation(rcfg)))
    return out
