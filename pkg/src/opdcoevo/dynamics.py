"""The coevolutionary Monte Carlo engine.

One inner step, for a uniformly drawn focal agent x:

1. compute the eight interaction utilities u_xy = w_xy * payoff(s_x, s_y) and
   their accumulated sum U_x;
2. adapt each incident link: w_xy gains the increment if u_xy exceeds the
   neighborhood mean U_x / 8, loses it if below, stays on an exact tie; each
   weight is then clamped into [1 - delta, 1 + delta];
3. recompute U_x on the adapted weights;
4. draw one neighbor y; if its accumulated utility U_y is strictly larger,
   x copies y's strategy with probability (U_y - U_x) / (8 * (T - P)),
   clamped to 1.

One Monte Carlo step is N inner steps (selection with replacement).  The
random draw order is documented in ``rng``; a single 64-bit seed fixes the
whole trajectory bitwise, on either kernel path.

``mc_inner_step`` / ``mc_step`` here are the readable Python forms used by
tests and small-scale work; ``run_simulation`` drives the hot kernels and
produces identical trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .game import GameParams, PUNISHMENT
from .lattice import LatticeConfig, Population, populate
from .rng import Pcg32


@dataclass(frozen=True)
class CoevolutionParams:
    """Link-weight adaptation: heterogeneity delta (half-width of the
    permitted band around 1) and the amplitude ratio increment/delta."""

    delta: float = 0.8
    ratio: float = 0.0

    def __post_init__(self):
        delta = float(self.delta)
        ratio = float(self.ratio)
        if not 0.0 < delta <= 1.0:
            raise ValueError(f"delta={self.delta!r} outside (0, 1]")
        if not 0.0 <= ratio <= 1.0:
            raise ValueError(f"ratio={self.ratio!r} outside [0, 1]")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "ratio", ratio)

    @property
    def increment(self) -> float:
        """Per-update weight step: ratio * delta."""
        return self.ratio * self.delta

    @property
    def weight_bounds(self) -> tuple[float, float]:
        return (1.0 - self.delta, 1.0 + self.delta)


@dataclass(frozen=True)
class SimConfig:
    lattice: LatticeConfig
    game: GameParams
    coevo: CoevolutionParams
    mc_steps: int = 100_000
    measure_window: int = 1000
    seed: int = 1
    snapshot_steps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.mc_steps < 0:
            raise ValueError(f"mc_steps={self.mc_steps!r} must be >= 0")
        # the series has mc_steps + 1 records (step 0 included)
        if not 1 <= self.measure_window <= max(1, self.mc_steps):
            raise ValueError(
                f"measure_window={self.measure_window!r} outside [1, {max(1, self.mc_steps)}]")
        steps = tuple(sorted(set(int(s) for s in self.snapshot_steps)))
        for s in steps:
            if not 0 <= s <= self.mc_steps:
                raise ValueError(f"snapshot step {s} outside [0, {self.mc_steps}]")
        object.__setattr__(self, "snapshot_steps", steps)


@dataclass(frozen=True)
class NeighborhoodUtility:
    """Interaction utilities of one agent against its eight neighbors."""

    per_edge: np.ndarray  # float64 (8,), neighbor order
    total: float          # left-to-right sum of per_edge
    mean: float           # total / 8


@dataclass(frozen=True)
class StrategyUpdateOutcome:
    """What one inner step did to the focal agent's strategy."""

    focal: int
    neighbor: int
    focal_utility: float
    neighbor_utility: float
    probability: float
    adopted: bool


def interaction_utilities(x: int, pop: Population, game: GameParams) -> NeighborhoodUtility:
    """u_xy = w_xy * payoff(s_x, s_y) for the eight neighbors of x, plus the
    accumulated sum and its mean.  Pure; consumes no randomness."""
    nbr, slots = pop.tables
    pay = game.payoff_matrix()
    sx = pop.strategies[x]
    per_edge = np.empty(8, dtype=np.float64)
    total = 0.0
    for d in range(8):
        u = pop.weights[slots[x, d]] * pay[sx, pop.strategies[nbr[x, d]]]
        per_edge[d] = u
        total += u
    return NeighborhoodUtility(per_edge, total, total / 8.0)


def update_link_weights(x: int, util: NeighborhoodUtility, pop: Population,
                        coevo: CoevolutionParams) -> None:
    """Adapt the eight edges incident to x against the neighborhood mean:
    +increment where the edge beats the mean, -increment where it trails,
    unchanged on an exact tie; then clamp into the [1-delta, 1+delta] band."""
    nbr, slots = pop.tables
    inc = coevo.increment
    wmin, wmax = coevo.weight_bounds
    for d in range(8):
        e = slots[x, d]
        if util.per_edge[d] > util.mean:
            pop.weights[e] = min(pop.weights[e] + inc, wmax)
        elif util.per_edge[d] < util.mean:
            pop.weights[e] = max(pop.weights[e] - inc, wmin)


def adoption_probability(u_x: float, u_y: float, game: GameParams) -> float:
    """Probability that the focal agent copies the compared neighbor:
    (U_y - U_x) / (8 * (T - P)) for U_y > U_x, clamped into [0, 1]."""
    if u_y <= u_x:
        return 0.0
    return min(1.0, (u_y - u_x) / (8.0 * (game.b - PUNISHMENT)))


def mc_inner_step(pop: Population, game: GameParams, coevo: CoevolutionParams,
                  stream: Pcg32) -> StrategyUpdateOutcome:
    """One asynchronous update, plain-Python form.  Matches the kernel
    trajectory draw for draw and bit for bit."""
    nbr, _ = pop.tables
    x = stream.next_below(pop.config.n)
    util = interaction_utilities(x, pop, game)
    u_x = util.total
    if coevo.increment > 0.0:
        update_link_weights(x, util, pop, coevo)
        u_x = interaction_utilities(x, pop, game).total
    y = int(nbr[x, stream.next_below(8)])
    u_y = interaction_utilities(y, pop, game).total
    probability = adoption_probability(u_x, u_y, game)
    adopted = False
    if u_y > u_x:
        # one uniform draw, consumed only on this branch
        if stream.next_double() < (u_y - u_x) / (8.0 * (game.b - PUNISHMENT)):
            pop.strategies[x] = pop.strategies[y]
            adopted = True
    return StrategyUpdateOutcome(int(x), y, float(u_x), float(u_y),
                                 probability, adopted)


def mc_step(pop: Population, game: GameParams, coevo: CoevolutionParams,
            stream: Pcg32) -> None:
    """N inner steps: every agent selected once on average."""
    for _ in range(pop.config.n):
        mc_inner_step(pop, game, coevo, stream)


@dataclass
class SimResult:
    """Full trajectory of one simulation."""

    config: SimConfig
    counts: np.ndarray  # int64 (mc_steps + 1, 3); row t = after t MC steps
    snapshots: tuple[tuple[int, np.ndarray], ...]  # (step, (side, side) int8 grid)
    population: Population

    @property
    def fractions(self) -> np.ndarray:
        """float64 (mc_steps + 1, 3): rho_c, rho_d, rho_a per MC step."""
        return self.counts / float(self.config.lattice.n)

    @property
    def steps(self) -> np.ndarray:
        return np.arange(self.counts.shape[0], dtype=np.int64)


def _kernel_args(pop: Population, game: GameParams, coevo: CoevolutionParams):
    nbr, slots = pop.tables
    pay = game.payoff_matrix()
    p_denom = 8.0 * (game.b - PUNISHMENT)
    wmin, wmax = coevo.weight_bounds
    return nbr, slots, pay, p_denom, coevo.increment, wmin, wmax


def run_simulation(cfg: SimConfig) -> SimResult:
    """Build the lattice from cfg.seed and run cfg.mc_steps Monte Carlo steps,
    recording strategy counts before any update and after every MC step, and
    grid snapshots at the configured steps.  Purely a function of cfg."""
    stream = Pcg32(cfg.seed)
    pop = populate(cfg.lattice, stream)
    nbr, slots, pay, p_denom, inc, wmin, wmax = _kernel_args(pop, cfg.game, cfg.coevo)

    counts = pop.strategy_counts()
    out = np.empty((cfg.mc_steps + 1, 3), dtype=np.int64)
    out[0] = counts
    rng = stream.state_array()

    snaps = []
    if 0 in cfg.snapshot_steps:
        snaps.append((0, pop.grid().copy()))
    prev = 0
    segment_ends = [s for s in cfg.snapshot_steps if s > 0]
    if not segment_ends or segment_ends[-1] != cfg.mc_steps:
        segment_ends.append(cfg.mc_steps)
    # uint64 wraparound inside the pcg32 state update is intentional; the
    # errstate silences the pure-python path's overflow warning
    with np.errstate(over="ignore"):
        for end in segment_ends:
            if end > prev:
                kernels.run_mc_steps(pop.strategies, pop.weights, nbr, slots,
                                     pay, p_denom, inc, wmin, wmax, rng,
                                     counts, end - prev, out, prev + 1)
                prev = end
            if end > 0 and end in cfg.snapshot_steps:
                snaps.append((end, pop.grid().copy()))
    stream.load_state_array(rng)
    return SimResult(cfg, out, tuple(snaps), pop)
