"""Hot inner loops of the Monte Carlo engine.

Every function here is decorated by ``accel.jit_kernel``: compiled with numba
by default, run as plain Python over numpy scalars when the fallback is
selected.  All integer arithmetic in the embedded PCG32 generator is done on
uint64 values so both paths wrap identically modulo 2**64; callers on the
pure path suppress numpy's overflow warning around kernel calls (the wrap is
the algorithm).

State passed in, never owned: strategies (int8, N), weights (float64, 4N),
the read-only neighbor/edge-slot tables (int64, (N, 8)), the payoff table
(float64, (3, 3)), the rng state (uint64, 2: state, inc) and the running
strategy counts (int64, 3).
"""

from __future__ import annotations

import numpy as np

from .accel import jit_kernel

# PCG32 (XSH-RR 64/32) constants, all uint64 so numba and numpy agree.
PCG_MULT = np.uint64(6364136223846793005)
MASK32 = np.uint64(0xFFFFFFFF)
_R18 = np.uint64(18)
_R27 = np.uint64(27)
_R59 = np.uint64(59)
_R31 = np.uint64(31)
_R32 = np.uint64(32)
_U8 = np.uint64(8)
TWO_NEG32 = np.float64(2.0**-32)


@jit_kernel
def pcg32_next(rng):
    """Advance the stream; return the next 32-bit output (as uint64)."""
    old = rng[0]
    rng[0] = old * PCG_MULT + rng[1]
    xs = (((old >> _R18) ^ old) >> _R27) & MASK32
    rot = old >> _R59
    return ((xs >> rot) | (xs << ((_R32 - rot) & _R31))) & MASK32


@jit_kernel
def uniform_double(rng):
    """Uniform in [0, 1) with 32-bit resolution: next_u32 * 2**-32."""
    return np.float64(pcg32_next(rng)) * TWO_NEG32


@jit_kernel
def accumulated_utility(x, strategies, weights, nbr, slots, pay):
    """Sum over the 8 edges of weight * payoff, accumulated in neighbor order."""
    sx = strategies[x]
    total = 0.0
    for d in range(8):
        total += weights[slots[x, d]] * pay[sx, strategies[nbr[x, d]]]
    return total


@jit_kernel
def inner_step(strategies, weights, nbr, slots, pay, p_denom, inc, wmin, wmax,
               rng, counts):
    """One asynchronous update: pick a focal agent, adapt its link weights,
    then let it probabilistically imitate one random neighbor.

    Draw order: focal index (mod N), neighbor slot (mod 8), then one uniform
    double for the imitation trial only when the neighbor does strictly
    better.  Weight steps of +-inc are applied first, then clamped into
    [wmin, wmax]; exact per-edge ties leave the weight unchanged.
    """
    n = strategies.shape[0]
    x = np.int64(pcg32_next(rng) % np.uint64(n))
    sx = strategies[x]

    ux = accumulated_utility(x, strategies, weights, nbr, slots, pay)
    if inc > 0.0:
        ubar = ux / 8.0
        for d in range(8):
            e = slots[x, d]
            u = weights[e] * pay[sx, strategies[nbr[x, d]]]
            if u > ubar:
                w = weights[e] + inc
                if w > wmax:
                    w = wmax
                weights[e] = w
            elif u < ubar:
                w = weights[e] - inc
                if w < wmin:
                    w = wmin
                weights[e] = w
        # utilities are compared on the adapted weights
        ux = accumulated_utility(x, strategies, weights, nbr, slots, pay)

    k = np.int64(pcg32_next(rng) % _U8)
    y = nbr[x, k]
    uy = accumulated_utility(y, strategies, weights, nbr, slots, pay)
    if uy > ux:
        # (uy - ux) / (8 * (T - P)); values above 1 act as certain adoption
        if uniform_double(rng) < (uy - ux) / p_denom:
            sy = strategies[y]
            counts[sx] -= 1
            counts[sy] += 1
            strategies[x] = sy


@jit_kernel
def run_inner_steps(strategies, weights, nbr, slots, pay, p_denom, inc, wmin,
                    wmax, rng, counts, n_inner):
    for _ in range(n_inner):
        inner_step(strategies, weights, nbr, slots, pay, p_denom, inc, wmin,
                   wmax, rng, counts)


@jit_kernel
def run_mc_steps(strategies, weights, nbr, slots, pay, p_denom, inc, wmin,
                 wmax, rng, counts, n_steps, out_counts, offset):
    """n_steps Monte Carlo steps of N inner steps each; after every MC step
    the running strategy counts are recorded at out_counts[offset + t]."""
    n = strategies.shape[0]
    for t in range(n_steps):
        for _ in range(n):
            inner_step(strategies, weights, nbr, slots, pay, p_denom, inc,
                       wmin, wmax, rng, counts)
        out_counts[offset + t, 0] = counts[0]
        out_counts[offset + t, 1] = counts[1]
        out_counts[offset + t, 2] = counts[2]
