"""Figure rendering for eigensolver benchmark CSVs."""

from .render import (
    HISTORY_COLUMNS,
    PlotError,
    PlotSpec,
    SUMMARY_COLUMNS,
    build_figure,
    read_table,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "HISTORY_COLUMNS",
    "PlotError",
    "PlotSpec",
    "SUMMARY_COLUMNS",
    "build_figure",
    "read_table",
    "render",
]
