"""
Misclassification losses and F-score.

The loss of a point is 0 when it is on the correct side of theta and
|f(x) - theta| otherwise. At f(x) = theta the loss is 0 for either side.
"""

from typing import Tuple

import numpy as np

from ..models.records import EvalMode, LossReport
from .classification import Classification, Side


class LengthMismatchError(ValueError):
    """Raised when truth values and a classification cover different point sets."""
    pass


def loss_point(f_val: float, theta: float, side: Side) -> float:
    if side == "H":
        return max(theta - f_val, 0.0)
    if side == "L":
        return max(f_val - theta, 0.0)
    raise ValueError(f"side must be 'H' or 'L', got {side!r}")


def pointwise_losses(high, truth, theta: float) -> np.ndarray:
    """Vectorised loss_point for membership flags ``high``."""
    high = np.asarray(high, dtype=bool)
    truth = np.asarray(truth, dtype=float)
    if high.shape != truth.shape:
        raise LengthMismatchError(
            f"classification covers {high.shape[0]} points, truth covers {truth.shape[0]}"
        )
    return np.where(high, np.maximum(theta - truth, 0.0), np.maximum(truth - theta, 0.0))


def loss_r(
    classification: Classification,
    truth,
    theta: float,
    mode: EvalMode = "finite_exact",
) -> float:
    """
    Average loss over the evaluation points.

    In ``finite_exact`` mode the points are all of X; in ``infinite_mc`` mode
    they are a uniform test set and the average estimates the
    volume-normalised integral. Both reduce to a plain mean.
    """
    return float(np.mean(pointwise_losses(classification.high, truth, theta)))


def maxvalue_loss(classification: Classification, truth, theta: float) -> float:
    """Largest loss over the evaluation points."""
    return float(np.max(pointwise_losses(classification.high, truth, theta)))


def fscore(classification: Classification, true_high) -> Tuple[float, float, float]:
    """
    (precision, recall, F) of H_t against H*.

    Empty denominators: |H_t| = 0 gives precision 1 if H* is empty else 0;
    |H*| = 0 gives recall 1 if H_t is empty else 0; precision + recall = 0
    gives F = 0.
    """
    est = classification.high
    true_high = np.asarray(true_high, dtype=bool).ravel()
    if est.shape != true_high.shape:
        raise LengthMismatchError(
            f"classification covers {est.shape[0]} points, H* mask covers {true_high.shape[0]}"
        )
    n_est = int(est.sum())
    n_true = int(true_high.sum())
    overlap = int(np.sum(est & true_high))

    if n_est == 0:
        precision = 1.0 if n_true == 0 else 0.0
    else:
        precision = overlap / n_est
    if n_true == 0:
        recall = 1.0 if n_est == 0 else 0.0
    else:
        recall = overlap / n_true

    if precision + recall == 0:
        return precision, recall, 0.0
    return precision, recall, 2.0 * precision * recall / (precision + recall)


def loss_report(
    classification: Classification,
    truth,
    theta: float,
    previous_cumulative: float = 0.0,
    mode: EvalMode = "finite_exact",
) -> LossReport:
    """
    All loss metrics of one classification.

    Args:
        classification: H/L membership of the evaluation points
        truth: f at the same points
        theta: Threshold
        previous_cumulative: R_{t-1}, added to this r_t to give R_t
        mode: ``finite_exact`` for all of X, ``infinite_mc`` for a uniform test set

    Returns:
        LossReport; ``n_test`` is the number of points in ``infinite_mc`` mode
    """
    truth = np.asarray(truth, dtype=float).ravel()
    losses = pointwise_losses(classification.high, truth, theta)
    precision, recall, f1 = fscore(classification, truth >= theta)
    r_t = float(losses.mean())
    return LossReport(
        r_t=r_t,
        R_t=previous_cumulative + r_t,
        max_loss=float(losses.max()),
        precision=precision,
        recall=recall,
        fscore=f1,
        n_high=classification.n_high,
        eval_mode=mode,
        n_test=truth.shape[0] if mode == "infinite_mc" else None,
    )
