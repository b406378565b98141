"""Optional prisoner's dilemma on a toroidal lattice with coevolving link weights.

A seedable Monte Carlo simulator: agents on a side x side torus play the
three-strategy game (cooperate / defect / abstain) against their eight Moore
neighbors through weighted links; link weights and strategies coevolve by
asynchronous updates.  See README.md for the model rules, the CLI and the
acceptance suite.
"""

from .accel import NUMBA_ENABLED, jit_status
from .dynamics import (CoevolutionParams, NeighborhoodUtility, SimConfig,
                       SimResult, StrategyUpdateOutcome, adoption_probability,
                       interaction_utilities, mc_inner_step, mc_step,
                       run_simulation, update_link_weights)
from .experiments import (DESK_SCALE, PAPER_SCALE, SNAPSHOT_SCHEDULE,
                          SweepResult, SweepRow, SweepSpec,
                          run_amplitude_sweep, run_ternary_sweep,
                          run_timecourse)
from .game import GameParams, PUNISHMENT, REWARD, SUCKER, Strategy, payoff
from .lattice import (LatticeConfig, Population, build_lattice, lattice_tables,
                      neighbors, populate)
from .metrics import (FractionRecord, RunAggregate, RunKey, RunSummary,
                      aggregate_runs, records_of, stationary_fraction,
                      strategy_fractions, summarize_run)
from .rng import Pcg32, derive_seed, splitmix64

__version__ = "0.1.0"

__all__ = [
    "CoevolutionParams", "DESK_SCALE", "FractionRecord", "GameParams",
    "LatticeConfig", "NUMBA_ENABLED", "NeighborhoodUtility", "PAPER_SCALE",
    "PUNISHMENT", "Pcg32", "Population", "REWARD", "RunAggregate", "RunKey",
    "RunSummary", "SNAPSHOT_SCHEDULE", "SUCKER", "SimConfig", "SimResult",
    "Strategy", "StrategyUpdateOutcome", "SweepResult", "SweepRow",
    "SweepSpec", "adoption_probability", "aggregate_runs", "build_lattice",
    "derive_seed", "interaction_utilities", "jit_status", "lattice_tables",
    "mc_inner_step", "mc_step", "neighbors", "payoff", "populate",
    "records_of", "run_amplitude_sweep", "run_simulation", "run_ternary_sweep",
    "run_timecourse", "splitmix64", "stationary_fraction",
    "strategy_fractions", "summarize_run", "update_link_weights",
]
