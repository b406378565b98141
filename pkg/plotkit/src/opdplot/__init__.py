"""Post-hoc figure rendering for the lattice-game simulator's file outputs.

Read-only consumer of the documented CSV/PPM formats; never required to run
or validate the simulator itself.
"""

from .csvio import PlotDataError, read_series, read_sweep
from .figures import (plot_amplitude_curves, plot_ternary, plot_timecourse,
                      render_snapshot_montage)
from .ppm import read_ppm

__version__ = "0.1.0"

__all__ = ["PlotDataError", "plot_amplitude_curves", "plot_ternary",
           "plot_timecourse", "read_ppm", "read_series", "read_sweep",
           "render_snapshot_montage"]
