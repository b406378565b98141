"""Strategy-fraction measurement, stationary averaging, multi-run aggregation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .dynamics import SimConfig, SimResult
from .lattice import Population


@dataclass(frozen=True)
class FractionRecord:
    """Strategy fractions at one MC step; exact counts divided by N."""

    step: int
    rho_c: float
    rho_d: float
    rho_a: float

    def astuple(self) -> tuple[float, float, float]:
        return (self.rho_c, self.rho_d, self.rho_a)


def strategy_fractions(pop: Population, step: int = 0) -> FractionRecord:
    c, d, a = pop.strategy_counts()
    n = float(pop.config.n)
    return FractionRecord(step, c / n, d / n, a / n)


def records_of(result: SimResult) -> list[FractionRecord]:
    """The full measured time series of a run as FractionRecord rows."""
    frac = result.fractions
    return [FractionRecord(int(t), float(frac[t, 0]), float(frac[t, 1]), float(frac[t, 2]))
            for t in range(frac.shape[0])]


def _as_fraction_array(series) -> np.ndarray:
    if isinstance(series, SimResult):
        return series.fractions
    if isinstance(series, np.ndarray):
        return series
    return np.array([r.astuple() for r in series], dtype=np.float64)


def stationary_fraction(series, window: int) -> tuple[float, float, float]:
    """Component-wise mean of the trailing `window` records."""
    frac = _as_fraction_array(series)
    if window < 1:
        raise ValueError(f"window={window!r} must be >= 1")
    if window > frac.shape[0]:
        raise ValueError(f"window={window} exceeds series length {frac.shape[0]}")
    tail = frac[-window:].mean(axis=0)
    return (float(tail[0]), float(tail[1]), float(tail[2]))


@dataclass(frozen=True)
class RunKey:
    """Configuration identity shared by runs that may be aggregated."""

    side: int
    b: float
    l: float
    delta: float
    ratio: float
    mc_steps: int
    measure_window: int


def key_of(cfg: SimConfig) -> RunKey:
    return RunKey(cfg.lattice.side, cfg.game.b, cfg.game.l, cfg.coevo.delta,
                  cfg.coevo.ratio, cfg.mc_steps, cfg.measure_window)


@dataclass(frozen=True)
class RunSummary:
    key: RunKey
    seed: int
    stationary: tuple[float, float, float]


def summarize_run(result: SimResult) -> RunSummary:
    cfg = result.config
    return RunSummary(key_of(cfg), cfg.seed,
                      stationary_fraction(result, cfg.measure_window))


@dataclass(frozen=True)
class RunAggregate:
    key: RunKey
    mean: tuple[float, float, float]
    stddev: tuple[float, float, float]  # sample (n-1); zeros for a single run
    runs: int
    seeds: tuple[int, ...]


def aggregate_runs(summaries: Sequence[RunSummary] | Iterable[RunSummary]) -> RunAggregate:
    """Component-wise mean and sample standard deviation across runs of one
    configuration.  Reductions go in sorted-seed order, so the result is
    independent of input permutation."""
    runs = sorted(summaries, key=lambda s: s.seed)
    if not runs:
        raise ValueError("aggregate_runs needs at least one summary")
    key = runs[0].key
    for s in runs[1:]:
        if s.key != key:
            raise ValueError(f"mixed configurations: {s.key} != {key}")
    n = len(runs)
    mean = [0.0, 0.0, 0.0]
    for s in runs:
        for i in range(3):
            mean[i] += s.stationary[i]
    mean = [m / n for m in mean]
    if n == 1:
        sd = [0.0, 0.0, 0.0]
    else:
        var = [0.0, 0.0, 0.0]
        for s in runs:
            for i in range(3):
                var[i] += (s.stationary[i] - mean[i]) ** 2
        sd = [math.sqrt(v / (n - 1)) for v in var]
    return RunAggregate(key, tuple(mean), tuple(sd), n,
                        tuple(s.seed for s in runs))
