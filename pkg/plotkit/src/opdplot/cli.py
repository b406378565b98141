"""Figure rendering front end.

    opdplot amplitude_curves --in sweep.csv --out fig.png [--loner 0.6]
    opdplot timecourse       --in a.csv b.csv ... --out fig.png [--labels ...]
    opdplot snapshot_montage --in s1.ppm ... --rows R --out fig.png
                             [--row-labels ...] [--col-labels ...]
    opdplot ternary          --in sweep.csv --out fig.png

Consumes the simulator's CSV/PPM files; exit code 0 on success, 1 with a
diagnostic on bad input.
"""

from __future__ import annotations

import argparse
import sys

from .csvio import PlotDataError
from .figures import (plot_amplitude_curves, plot_ternary, plot_timecourse,
                      render_snapshot_montage)


def build_parser():
    parser = argparse.ArgumentParser(prog="opdplot", description="render simulator figures")
    sub = parser.add_subparsers(dest="kind", required=True)

    p = sub.add_parser("amplitude_curves", help="rho_c vs amplitude, curves per (b, delta)")
    p.add_argument("--in", dest="inputs", nargs=1, required=True, metavar="SWEEP_CSV")
    p.add_argument("--out", required=True)
    p.add_argument("--loner", type=float, default=None,
                   help="fixed l to select (default: first row's value)")

    p = sub.add_parser("timecourse", help="rho_c over MC steps, one curve per series")
    p.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="SERIES_CSV")
    p.add_argument("--out", required=True)
    p.add_argument("--labels", nargs="+", default=None)

    p = sub.add_parser("snapshot_montage", help="grid of lattice snapshots")
    p.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="PPM")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--row-labels", nargs="+", default=None)
    p.add_argument("--col-labels", nargs="+", default=None)

    p = sub.add_parser("ternary", help="three stationary-fraction panels over (b, l, ratio)")
    p.add_argument("--in", dest="inputs", nargs=1, required=True, metavar="SWEEP_CSV")
    p.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.kind == "amplitude_curves":
            out = plot_amplitude_curves(args.inputs[0], args.out, loner=args.loner)
        elif args.kind == "timecourse":
            out = plot_timecourse(args.inputs, args.out, labels=args.labels)
        elif args.kind == "snapshot_montage":
            out = render_snapshot_montage(args.inputs, args.rows, args.out,
                                          row_labels=args.row_labels,
                                          col_labels=args.col_labels)
        else:
            out = plot_ternary(args.inputs[0], args.out)
    except (PlotDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
