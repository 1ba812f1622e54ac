"""
CSV artefacts.

Floats are written in their shortest round-trip form (``repr``), so reading
a file back with ``float_precision="round_trip"`` reproduces every value.
"""

import csv
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..models.records import RunRecord

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
ROW_METRICS = ("y", "beta", "r_t", "R_t", "max_loss", "precision", "recall", "fscore", "wall_ms")


class ExportError(OSError):
    """Raised when an artefact cannot be written or read."""
    pass


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if value is None:
        return ""
    return repr(float(value))


def runs_header(dim: int) -> List[str]:
    return ["seed", "t"] + [f"x{i + 1}" for i in range(dim)] + list(ROW_METRICS)


def _write(path: PathLike, header: Sequence[str], rows) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow(row)
    except OSError as e:
        raise ExportError(f"could not write {path}: {e}") from e
    return path


def emit_runs_csv(records: Sequence[RunRecord], path: PathLike, dim: Optional[int] = None) -> Path:
    """One line per (seed, t) in seed order; header only when there are no rows."""
    if dim is None:
        dim = records[0].dim if records else 0
    rows = (
        [_fmt(row.seed), _fmt(row.t)] + [_fmt(v) for v in row.x] + [_fmt(getattr(row, m)) for m in ROW_METRICS]
        for record in sorted(records, key=lambda r: r.seed)
        for row in record.rows
    )
    out = _write(path, runs_header(dim), rows)
    logger.info(f"Wrote per-iteration rows to {out}")
    return out


def emit_seeds_csv(records: Sequence[RunRecord], path: PathLike) -> Path:
    """
    Terminal outputs per seed.

    Args:
        records: Run records of one experiment
        path: CSV file to write

    Returns:
        Path written; columns are the returned iteration, |H|, r and max-value
        loss of the returned classification, and any error
    """
    header = [
        "seed", "acquisition", "rows", "t_check", "n_high_terminal",
        "terminal_r", "terminal_max_loss", "error",
    ]
    rows = (
        [_fmt(r.seed), r.acquisition, _fmt(len(r.rows)), _fmt(r.t_check), _fmt(r.n_high_terminal),
         _fmt(r.terminal.r_t if r.terminal else None), _fmt(r.terminal.max_loss if r.terminal else None),
         r.error or ""]
        for r in sorted(records, key=lambda r: r.seed)
    )
    return _write(path, header, rows)


def emit_summary_csv(summary: pd.DataFrame, path: PathLike) -> Path:
    rows = (
        [_fmt(int(rec[0]))] + [_fmt(v) for v in rec[1:]]
        for rec in summary.itertuples(index=False, name=None)
    )
    out = _write(path, list(summary.columns), rows)
    logger.info(f"Wrote summary to {out}")
    return out


def emit_csv(data, path: PathLike, dim: Optional[int] = None) -> Path:
    """
    Write run records or a summary table, choosing the layout from the input.

    Args:
        data: List of RunRecord, or a summary DataFrame from aggregate
        path: Output CSV path; parent folders are created
        dim: Input dimension for the x columns of the runs layout

    Returns:
        Path of the written file
    """
    if isinstance(data, pd.DataFrame):
        return emit_summary_csv(data, path)
    return emit_runs_csv(list(data), path, dim=dim)


def _read(path: PathLike) -> pd.DataFrame:
    try:
        return pd.read_csv(path, float_precision="round_trip")
    except (OSError, pd.errors.ParserError) as e:
        raise ExportError(f"could not read {path}: {e}") from e


def load_runs_csv(path: PathLike) -> pd.DataFrame:
    return _read(path)


def load_summary_csv(path: PathLike) -> pd.DataFrame:
    return _read(path)
