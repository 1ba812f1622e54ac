"""Per-iteration summaries across seeds."""

import logging
from typing import List, Sequence

import numpy as np
import pandas as pd

from ..models.records import RunRecord

logger = logging.getLogger(__name__)

SUMMARY_METRICS = ("r_t", "fscore", "max_loss")
ERROR_BAR_SCALE = 6.0


def summary_columns(metrics: Sequence[str] = SUMMARY_METRICS) -> List[str]:
    columns = ["t"]
    for m in metrics:
        columns += [f"{m}_mean", f"{m}_se", f"{m}_err6"]
    return columns


def aggregate(records: Sequence[RunRecord], metrics: Sequence[str] = SUMMARY_METRICS) -> pd.DataFrame:
    """
    Mean, standard error (sample sd / sqrt(n)) and 6 x SE of every metric at
    every iteration. Failed seeds are left out; with one seed the SE is 0.

    Args:
        records: Run records of one experiment
        metrics: RunRow fields to summarize

    Returns:
        DataFrame with columns t, then <metric>_mean, _se and _err6 per metric
    """
    complete = [r for r in records if not r.failed]
    dropped = len(records) - len(complete)
    if dropped:
        logger.warning(f"Leaving {dropped} failed seed(s) out of the summary")
    if not complete:
        return pd.DataFrame(columns=summary_columns(metrics))

    frame = pd.DataFrame(
        [{"seed": row.seed, "t": row.t, **{m: getattr(row, m) for m in metrics}}
         for record in complete for row in record.rows]
    )
    # seed order must not affect floating-point sums
    frame = frame.sort_values(["t", "seed"], kind="mergesort")
    grouped = frame.groupby("t", sort=True)

    summary = pd.DataFrame({"t": np.array(sorted(frame["t"].unique()), dtype=int)})
    for m in metrics:
        mean = grouped[m].mean().to_numpy()
        count = grouped[m].count().to_numpy()
        sd = grouped[m].std(ddof=1).to_numpy()
        se = np.where(count > 1, sd / np.sqrt(np.maximum(count, 1)), 0.0)
        se = np.where(count == 0, np.nan, se)
        summary[f"{m}_mean"] = mean
        summary[f"{m}_se"] = se
        summary[f"{m}_err6"] = ERROR_BAR_SCALE * se
    return summary
