"""Optional numba acceleration for the hot kernels.

The kernels in ``kernels.py`` are written once and run on two paths: compiled
with numba's @njit (the default) or as plain Python over numpy scalars.  Set
the environment variable ``OPDCOEVO_DISABLE_NUMBA=1`` before import to force
the pure-numpy fallback; the two paths produce bitwise-identical
trajectories.  ``benchmarks/bench_kernels.py`` compares their throughput.
"""

from __future__ import annotations

import os

DISABLE_ENV_VAR = "OPDCOEVO_DISABLE_NUMBA"


def _disabled_by_env() -> bool:
    return os.environ.get(DISABLE_ENV_VAR, "").strip().lower() in ("1", "true", "yes", "on")


try:
    if _disabled_by_env():
        raise ImportError(f"numba disabled via {DISABLE_ENV_VAR}")
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False


def jit_kernel(func):
    """Decorate a hot loop: nopython-compiled when numba is on, as-is otherwise."""
    if NUMBA_ENABLED:
        return _njit(cache=True)(func)
    return func


def jit_status() -> str:
    return "numba" if NUMBA_ENABLED else "pure-python fallback"
