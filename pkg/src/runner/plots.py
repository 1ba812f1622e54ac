"""SVG line plots of summary metrics with +-6 SE error bars."""

import logging
from pathlib import Path
from typing import Dict, Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

from .aggregate import SUMMARY_METRICS  # noqa: E402

logger = logging.getLogger(__name__)

# fixed element ids so identical input gives identical bytes
SVG_HASH_SALT = "level-set-lab"

METRIC_LABELS = {"r_t": "r_t", "fscore": "F-score", "max_loss": "max-value loss"}


class UnknownMetricError(ValueError):
    """Raised for a metric that is not in the summary."""
    pass


def summary_label(path: Union[str, Path]) -> str:
    """Series label for a summary file: its stem, or the parent folder for summary.csv."""
    path = Path(path)
    if path.stem == "summary" and path.parent.name:
        return path.parent.name
    return path.stem


def emit_plot(
    summaries: Dict[str, pd.DataFrame],
    path: Union[str, Path],
    metric: str = "r_t",
    title: Optional[str] = None,
) -> Path:
    """
    Mean metric against iteration, one series per entry of ``summaries``
    (label -> summary table), error bars of 6 standard errors.

    Args:
        summaries: Label to summary table, in legend order
        path: Output image path
        metric: One of r_t, fscore or max_loss
        title: Optional figure title

    Returns:
        Path of the written image
    """
    if not summaries:
        raise ValueError("nothing to plot")
    available = sorted(SUMMARY_METRICS)
    if metric not in SUMMARY_METRICS:
        raise UnknownMetricError(f"unknown metric '{metric}'; available: {', '.join(available)}")
    for label, frame in summaries.items():
        if frame.empty:
            raise ValueError(f"summary '{label}' has no rows")
        if f"{metric}_mean" not in frame.columns:
            raise UnknownMetricError(
                f"summary '{label}' has no '{metric}' columns; available: {', '.join(available)}"
            )

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        for label, frame in summaries.items():
            rows = frame.dropna(subset=[f"{metric}_mean"])
            ax.errorbar(
                rows["t"],
                rows[f"{metric}_mean"],
                yerr=rows[f"{metric}_err6"].fillna(0.0),
                label=label,
                capsize=2,
                linewidth=1.2,
                elinewidth=0.6,
            )
        ax.set_xlabel("iteration")
        ax.set_ylabel(METRIC_LABELS.get(metric, metric))
        if title:
            ax.set_title(title)
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    logger.info(f"Wrote {metric} plot with {len(summaries)} series to {path}")
    return path
