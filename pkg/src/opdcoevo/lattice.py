"""Toroidal square lattice with Moore-8 neighborhoods and undirected edge weights.

Agents live on a side x side torus in row-major order (index = row * side +
col).  Each agent has eight neighbors in the fixed order

    NW, N, NE, W, E, SW, S, SE

and every undirected edge carries one shared weight, stored once.  The 4N
edge slots are addressed canonically: the E, SW, S, SE edge of agent x lives
at flat slot 4*x + (direction - 4), and the remaining four directions alias
the neighbor's canonical slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .game import Strategy
from .rng import Pcg32

# (row, col) offsets in the fixed neighbor order NW, N, NE, W, E, SW, S, SE.
DIRECTIONS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))

# Opposite of direction d is 7 - d (NW<->SE, N<->S, NE<->SW, W<->E).
OPPOSITE = tuple(7 - d for d in range(8))

EDGES_PER_AGENT = 4  # canonical slots per agent: E, SW, S, SE


@dataclass(frozen=True)
class LatticeConfig:
    """Grid geometry.  side >= 3 keeps the eight Moore neighbors distinct."""

    side: int

    def __post_init__(self):
        if int(self.side) != self.side or self.side < 3:
            raise ValueError(f"side={self.side!r}: need an integer side >= 3")
        object.__setattr__(self, "side", int(self.side))

    @property
    def n(self) -> int:
        return self.side * self.side


@lru_cache(maxsize=None)
def lattice_tables(side: int) -> tuple[np.ndarray, np.ndarray]:
    """(neighbors, edge_slots) int64 tables of shape (N, 8), read-only.

    neighbors[x, d] is the index of x's neighbor in direction d;
    edge_slots[x, d] is the flat index of the shared weight slot of that edge,
    with edge_slots[x, d] == edge_slots[neighbors[x, d], 7 - d].
    """
    cfg = LatticeConfig(side)
    idx = np.arange(cfg.n, dtype=np.int64)
    row, col = idx // side, idx % side
    neighbors = np.empty((cfg.n, 8), dtype=np.int64)
    for d, (dr, dc) in enumerate(DIRECTIONS):
        neighbors[:, d] = ((row + dr) % side) * side + (col + dc) % side
    edge_slots = np.empty((cfg.n, 8), dtype=np.int64)
    for d in range(8):
        if d >= 4:
            edge_slots[:, d] = EDGES_PER_AGENT * idx + (d - 4)
        else:
            edge_slots[:, d] = EDGES_PER_AGENT * neighbors[:, d] + (3 - d)
    neighbors.setflags(write=False)
    edge_slots.setflags(write=False)
    return neighbors, edge_slots


def neighbors(index: int, config: LatticeConfig) -> np.ndarray:
    """The 8 toroidally wrapped Moore neighbors of index, in fixed order."""
    if not 0 <= index < config.n:
        raise ValueError(f"agent index {index} outside [0, {config.n})")
    return lattice_tables(config.side)[0][index].copy()


@dataclass
class Population:
    """One simulated world: strategies plus the undirected edge-weight store."""

    config: LatticeConfig
    strategies: np.ndarray  # int8, shape (N,)
    weights: np.ndarray     # float64, shape (4N,), canonical slot layout

    def __post_init__(self):
        if self.strategies.shape != (self.config.n,):
            raise ValueError("strategies length must equal side**2")
        if self.weights.shape != (EDGES_PER_AGENT * self.config.n,):
            raise ValueError("weights length must equal 4 * side**2")

    @property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        return lattice_tables(self.config.side)

    def neighbors_of(self, x: int) -> np.ndarray:
        return neighbors(x, self.config)

    def _edge_slot(self, x: int, y: int) -> int:
        nbr, slots = self.tables
        if not 0 <= x < self.config.n:
            raise ValueError(f"agent index {x} outside [0, {self.config.n})")
        hits = np.nonzero(nbr[x] == y)[0]
        if hits.size == 0:
            raise ValueError(f"agents {x} and {y} are not lattice neighbors")
        return int(slots[x, hits[0]])

    def edge_weight(self, x: int, y: int) -> float:
        """Shared weight of the undirected edge {x, y}; order-insensitive."""
        return float(self.weights[self._edge_slot(x, y)])

    def set_edge_weight(self, x: int, y: int, value: float,
                        bounds: tuple[float, float] | None = None) -> None:
        """Write the shared edge slot.  No clamping here; the dynamics owns
        that.  Asserts the band invariant when bounds are supplied, and the
        loosest possible band (delta <= 1) otherwise."""
        if bounds is not None:
            assert bounds[0] <= value <= bounds[1], (value, bounds)
        assert 0.0 <= value <= 2.0, value
        self.weights[self._edge_slot(x, y)] = value

    def strategy_counts(self) -> np.ndarray:
        """int64 counts of (cooperators, defectors, abstainers)."""
        return np.bincount(self.strategies, minlength=3).astype(np.int64)

    def grid(self) -> np.ndarray:
        """Strategies as a (side, side) array (a view)."""
        return self.strategies.reshape(self.config.side, self.config.side)

    def copy(self) -> "Population":
        return Population(self.config, self.strategies.copy(), self.weights.copy())


def populate(config: LatticeConfig, stream: Pcg32) -> Population:
    """Fill a lattice from an already-seeded stream: one bounded draw per
    agent in index order (mod 3 -> C, D, A), every edge weight exactly 1."""
    strategies = np.empty(config.n, dtype=np.int8)
    for i in range(config.n):
        strategies[i] = stream.next_below(3)
    weights = np.ones(EDGES_PER_AGENT * config.n, dtype=np.float64)
    return Population(config, strategies, weights)


def build_lattice(config: LatticeConfig, seed: int) -> Population:
    """Fresh world: uniform random strategies, all edge weights 1.0.

    Deterministic in (config, seed); uses the first N draws of Pcg32(seed).
    """
    return populate(config, Pcg32(seed))
