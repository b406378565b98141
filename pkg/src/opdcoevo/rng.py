"""Seedable random streams shared by the Python API and the hot kernels.

The generator is PCG32 (XSH-RR, 64-bit state, 32-bit output) on a fixed
stream constant, so a single 64-bit seed pins an entire trajectory.  The
package-wide draw contract, relied on by tests and by any external
re-implementation, is:

* bounded integers are ``next_u32() % k`` (modulo; bias below k / 2**32);
* uniform doubles are ``next_u32() * 2**-32``, i.e. 32-bit resolution in [0, 1);
* lattice construction draws one bounded integer (mod 3) per agent in
  index order 0..N-1;
* each Monte Carlo inner step draws, in order: the focal index (mod N),
  the compared-neighbor slot (mod 8), and one uniform double for the
  imitation trial, the last consumed only when the neighbor utility
  strictly exceeds the focal utility.

``Pcg32`` here is the plain-Python implementation used for setup and for
readable reference paths; the numerically identical kernel version lives in
``kernels.py`` and exchanges state through ``state_array``.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
MASK32 = (1 << 32) - 1

_PCG_MULT = 6364136223846793005
DEFAULT_STREAM = 0xDA3E39CB94B95BDB

_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value: int) -> int:
    """One SplitMix64 scramble of a 64-bit value."""
    z = (value + _SPLITMIX_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(base: int, *indices: int) -> int:
    """Deterministic child seed from a base seed and integer coordinates.

    Used by the experiment harness as derive_seed(base, point_index,
    run_index); any single point can be reproduced in isolation.
    """
    s = base & MASK64
    for k in indices:
        s = splitmix64(s ^ splitmix64(k & MASK64))
    return s


class Pcg32:
    """PCG32 stream over Python ints (exact 64-bit wraparound via masking)."""

    __slots__ = ("state", "inc")

    def __init__(self, seed: int, stream: int = DEFAULT_STREAM):
        self.inc = ((stream << 1) | 1) & MASK64
        self.state = 0
        self._advance()
        self.state = (self.state + (seed & MASK64)) & MASK64
        self._advance()

    def _advance(self):
        self.state = (self.state * _PCG_MULT + self.inc) & MASK64

    def next_u32(self) -> int:
        old = self.state
        self._advance()
        xs = (((old >> 18) ^ old) >> 27) & MASK32
        rot = old >> 59
        return ((xs >> rot) | (xs << ((32 - rot) & 31))) & MASK32

    def next_double(self) -> float:
        return self.next_u32() * 2.0**-32

    def next_below(self, k: int) -> int:
        return self.next_u32() % k

    def state_array(self) -> np.ndarray:
        """Exportable (state, inc) pair for the kernel-side generator."""
        return np.array([self.state, self.inc], dtype=np.uint64)

    def load_state_array(self, arr) -> None:
        self.state = int(arr[0])
        self.inc = int(arr[1])
