"""Render solver benchmark CSVs into figures.

Two CSV schemas are understood, detected from the header row. History files
carry one row per iteration and Ritz pair and become residual-versus-
iteration curves with a logarithmic residual axis by default. Summary files
carry one row per method and become bar charts of mean iteration counts
with standard-deviation error bars.

The module is stateless: it reads the documented schemas, draws, writes one
image, and keeps nothing. Block histories either collapse to the worst
residual across pairs (default) or fan out into one panel per pair when
facet mode is on.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = [
    "HISTORY_COLUMNS",
    "SUMMARY_COLUMNS",
    "PlotError",
    "PlotSpec",
    "read_table",
    "build_figure",
    "render",
]

HISTORY_COLUMNS = [
    "iter", "pair", "residual", "ritz_value", "beta", "basis_rank", "dropped",
]
SUMMARY_COLUMNS = [
    "problem", "method", "beta", "mean_iters", "std_iters",
    "converged_runs", "trials",
]


class PlotError(Exception):
    """Anything that should reach the user as a message, not a traceback."""


@dataclass(frozen=True)
class PlotSpec:
    """One figure: input CSVs, curve labels, output path, axis options."""

    inputs: tuple
    out: str
    labels: tuple | None = None
    log_y: bool = True
    facet_pairs: bool = False

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if not self.inputs:
            raise PlotError("at least one input CSV is required")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.inputs):
                raise PlotError(
                    f"{len(self.labels)} labels for {len(self.inputs)} inputs; "
                    "counts must match"
                )

    def curve_labels(self):
        if self.labels is not None:
            return list(self.labels)
        return [os.path.splitext(os.path.basename(p))[0] for p in self.inputs]


def _classify(header, path):
    if header == HISTORY_COLUMNS:
        return "history"
    if header == SUMMARY_COLUMNS:
        return "summary"
    got = set(header)
    # report against whichever schema the file is closest to
    hist_missing = [c for c in HISTORY_COLUMNS if c not in got]
    summ_missing = [c for c in SUMMARY_COLUMNS if c not in got]
    if len(hist_missing) <= len(summ_missing):
        kind, missing = "history", hist_missing
    else:
        kind, missing = "summary", summ_missing
    if missing:
        raise PlotError(
            f"{path}: header does not match any known schema; "
            f"missing {kind} column(s): {', '.join(missing)}"
        )
    raise PlotError(
        f"{path}: header has all {kind} columns but in unexpected order"
    )


def read_table(path):
    """Parse one CSV; returns (kind, rows) with typed row dicts.

    kind is "history" or "summary". Raises PlotError for unreadable files,
    unknown headers (naming the missing columns), or files with no data.
    """
    try:
        with open(path, newline="") as fh:
            raw = list(csv.reader(fh))
    except OSError as exc:
        raise PlotError(f"cannot read {path}: {exc.strerror}") from exc
    if not raw:
        raise PlotError(f"{path} is empty")
    kind = _classify(raw[0], path)
    body = [r for r in raw[1:] if r]
    if not body:
        raise PlotError(f"{path} has a header but no data rows")
    rows = []
    try:
        if kind == "history":
            for r in body:
                rows.append(
                    {
                        "iter": int(r[0]),
                        "pair": int(r[1]),
                        "residual": float(r[2]),
                        "ritz_value": float(r[3]),
                        "beta": float(r[4]),
                        "basis_rank": int(r[5]),
                        "dropped": int(r[6]),
                    }
                )
        else:
            for r in body:
                rows.append(
                    {
                        "problem": r[0],
                        "method": r[1],
                        "beta": r[2],
                        "mean_iters": float(r[3]),
                        "std_iters": float(r[4]),
                        "converged_runs": int(r[5]),
                        "trials": int(r[6]),
                    }
                )
    except (ValueError, IndexError) as exc:
        raise PlotError(f"{path}: malformed data row: {exc}") from exc
    return kind, rows


def _history_curves(rows):
    """Group one history table by pair: {pair: (iters, residuals)}."""
    by_pair = {}
    for row in rows:
        by_pair.setdefault(row["pair"], ([], []))
        by_pair[row["pair"]][0].append(row["iter"])
        by_pair[row["pair"]][1].append(row["residual"])
    return by_pair


def _draw_history(spec, tables, labels):
    curves = [_history_curves(t) for t in tables]
    n_pairs = max(max(c) for c in curves)
    if spec.facet_pairs:
        fig, axs = plt.subplots(
            1, n_pairs, figsize=(5.2 * n_pairs, 4.0), squeeze=False, sharey=True
        )
        for pair in range(1, n_pairs + 1):
            ax = axs[0][pair - 1]
            for label, by_pair in zip(labels, curves):
                if pair in by_pair:
                    ax.plot(*by_pair[pair], label=label, linewidth=1.2)
            ax.set_title(f"pair {pair}")
            ax.set_xlabel("iteration")
            if spec.log_y:
                ax.set_yscale("log")
            ax.grid(True, alpha=0.3)
        axs[0][0].set_ylabel("residual 2-norm")
        axs[0][-1].legend()
    else:
        fig, ax = plt.subplots(figsize=(6.0, 4.2))
        for label, by_pair in zip(labels, curves):
            # one curve per file: the worst residual over pairs each iteration
            its = sorted({i for pts in by_pair.values() for i in pts[0]})
            worst = {}
            for pts in by_pair.values():
                for i, r in zip(*pts):
                    worst[i] = max(worst.get(i, 0.0), r)
            ax.plot(its, [worst[i] for i in its], label=label, linewidth=1.2)
        ax.set_xlabel("iteration")
        ax.set_ylabel("residual 2-norm")
        if spec.log_y:
            ax.set_yscale("log")
        ax.grid(True, alpha=0.3)
        ax.legend()
    return fig


def _draw_summary(spec, tables, labels):
    keys = []
    for rows in tables:
        for r in rows:
            key = (r["method"], r["beta"])
            if key not in keys:
                keys.append(key)
    ticks = [m if not b else f"{m} ({b})" for m, b in keys]
    fig, ax = plt.subplots(figsize=(1.2 + 1.1 * len(keys), 4.2))
    width = 0.8 / len(tables)
    for j, (rows, label) in enumerate(zip(tables, labels)):
        by_key = {(r["method"], r["beta"]): r for r in rows}
        xs, means, stds = [], [], []
        for i, key in enumerate(keys):
            if key in by_key:
                xs.append(i + (j - 0.5 * (len(tables) - 1)) * width)
                means.append(by_key[key]["mean_iters"])
                stds.append(by_key[key]["std_iters"])
        ax.bar(xs, means, width=width, yerr=stds, capsize=3, label=label)
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels(ticks, rotation=20, ha="right")
    ax.set_ylabel("mean iterations")
    if spec.log_y:
        ax.set_yscale("log")
    problems = {r["problem"] for rows in tables for r in rows}
    if len(problems) == 1:
        ax.set_title(next(iter(problems)))
    ax.grid(True, axis="y", alpha=0.3)
    ax.legend()
    return fig


def build_figure(spec):
    """Parse every input and draw, returning the matplotlib figure."""
    parsed = [read_table(p) for p in spec.inputs]
    kinds = {kind for kind, _ in parsed}
    if len(kinds) > 1:
        raise PlotError("cannot mix history and summary CSVs in one figure")
    kind = kinds.pop()
    tables = [rows for _, rows in parsed]
    labels = spec.curve_labels()
    if kind == "summary":
        if spec.facet_pairs:
            raise PlotError("facet mode applies to history CSVs only")
        fig = _draw_summary(spec, tables, labels)
    else:
        fig = _draw_history(spec, tables, labels)
    fig.tight_layout()
    return fig


def render(spec):
    """Build the figure and write it to spec.out; returns the output path."""
    fig = build_figure(spec)
    out_dir = os.path.dirname(spec.out)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    fig.savefig(spec.out, dpi=150)
    plt.close(fig)
    return spec.out
