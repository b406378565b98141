"""Payoff rules of the optional prisoner's dilemma.

Two agents either cooperate (C), defect (D) or abstain (A).  Payoffs use the
normalized weak-dilemma constants R=1, P=0, S=0; the temptation T=b and the
loner payoff L=l are the two free parameters.  Any pairing involving an
abstainer pays both sides the loner payoff.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Strategy(enum.IntEnum):
    """Agent strategy; the integer value is the on-grid byte encoding."""

    COOPERATE = 0
    DEFECT = 1
    ABSTAIN = 2


REWARD = 1.0      # mutual cooperation
PUNISHMENT = 0.0  # mutual defection
SUCKER = 0.0      # cooperating against a defector


@dataclass(frozen=True)
class GameParams:
    """Free payoff parameters.

    b: temptation to defect, valid in [1, 2].
    l: loner payoff earned by both sides whenever one abstains, valid in [0, 1).
    """

    b: float = 1.9
    l: float = 0.6

    def __post_init__(self):
        b = float(self.b)
        l = float(self.l)
        if not 1.0 <= b <= 2.0:
            raise ValueError(f"temptation b={self.b!r} outside [1, 2]")
        if not 0.0 <= l < 1.0:
            raise ValueError(f"loner payoff l={self.l!r} outside [0, 1)")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "l", l)

    def payoff_matrix(self) -> np.ndarray:
        """3x3 float64 table of row-player payoffs indexed (own, opponent)."""
        m = np.empty((3, 3), dtype=np.float64)
        m[Strategy.COOPERATE] = (REWARD, SUCKER, self.l)
        m[Strategy.DEFECT] = (self.b, PUNISHMENT, self.l)
        m[Strategy.ABSTAIN] = (self.l, self.l, self.l)
        return m


def payoff(sx: Strategy | int, sy: Strategy | int, game: GameParams) -> float:
    """Row-player payoff when sx meets sy.  Total over all 9 pairings."""
    if sx == Strategy.ABSTAIN or sy == Strategy.ABSTAIN:
        return game.l
    if sx == Strategy.COOPERATE:
        return REWARD if sy == Strategy.COOPERATE else SUCKER
    return game.b if sy == Strategy.COOPERATE else PUNISHMENT
