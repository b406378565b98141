"""Throughput comparison of the two kernel paths: numba @njit vs the
pure-python fallback selected by OPDCOEVO_DISABLE_NUMBA=1.

Usage: python3 benchmarks/bench_kernels.py [--side 30] [--steps 200]

Each path runs in its own subprocess (the flag is read at import time).
The numba timing excludes compilation (a warmup run precedes the timed one).
"""

import argparse
import json
import os
import subprocess
import sys

PROBE = """
import json, os, time
import opdcoevo as oc

side = {side}
steps = {steps}
cfg = oc.SimConfig(oc.LatticeConfig(side), oc.GameParams(1.9, 0.6),
                   oc.CoevolutionParams(0.8, 0.5), mc_steps=steps,
                   measure_window=1, seed=7)
warm = oc.SimConfig(oc.LatticeConfig(side), oc.GameParams(1.9, 0.6),
                    oc.CoevolutionParams(0.8, 0.5), mc_steps=1,
                    measure_window=1, seed=7)
oc.run_simulation(warm)  # compile / warm caches
t0 = time.perf_counter()
res = oc.run_simulation(cfg)
dt = time.perf_counter() - t0
print(json.dumps({{
    "mode": oc.jit_status(),
    "seconds": dt,
    "inner_steps": side * side * steps,
    "final": res.fractions[-1].tolist(),
}}))
"""


def run_once(side, steps, disable_numba):
    env = dict(os.environ)
    if disable_numba:
        env["OPDCOEVO_DISABLE_NUMBA"] = "1"
    else:
        env.pop("OPDCOEVO_DISABLE_NUMBA", None)
    code = PROBE.format(side=side, steps=steps)
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--side", type=int, default=30)
    parser.add_argument("--steps", type=int, default=200)
    parser.add_argument("--pure-steps", type=int, default=None,
                        help="fewer MC steps for the slow pure path (default: steps // 20)")
    args = parser.parse_args()
    pure_steps = args.pure_steps if args.pure_steps is not None else max(1, args.steps // 20)

    jit = run_once(args.side, args.steps, disable_numba=False)
    pure = run_once(args.side, pure_steps, disable_numba=True)

    rows = []
    for r in (jit, pure):
        rate = r["inner_steps"] / r["seconds"]
        rows.append((r["mode"], r["inner_steps"], r["seconds"], rate))
        print(f"{r['mode']:>22}: {r['inner_steps']:>10} inner steps in "
              f"{r['seconds']:8.3f} s  ->  {rate:12.0f} steps/s")
    speedup = rows[0][3] / rows[1][3]
    print(f"{'speedup':>22}: {speedup:.1f}x (same trajectories bitwise; "
          f"see tests/test_accel.py)")


if __name__ == "__main__":
    main()
