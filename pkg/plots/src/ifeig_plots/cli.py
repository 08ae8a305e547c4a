"""Command line wrapper: plots <csv> [...] --out fig.png."""

from __future__ import annotations

import argparse
import sys

from .render import PlotError, PlotSpec, render

__all__ = ["main"]


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="plots",
        description="Render solver history or summary CSVs into one figure",
    )
    ap.add_argument("csvs", nargs="+", metavar="csv",
                    help="history or summary CSV files (one kind per figure)")
    ap.add_argument("--labels", nargs="+",
                    help="legend labels, one per input (default: file stems)")
    ap.add_argument("--out", required=True, help="output image path")
    ap.add_argument("--facet-pairs", action="store_true", dest="facet_pairs",
                    help="one panel per Ritz pair for block histories")
    ap.add_argument("--linear-y", action="store_true",
                    help="linear instead of logarithmic residual axis")
    return ap


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        spec = PlotSpec(
            inputs=tuple(args.csvs),
            out=args.out,
            labels=tuple(args.labels) if args.labels else None,
            log_y=not args.linear_y,
            facet_pairs=args.facet_pairs,
        )
        path = render(spec)
    except PlotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
