"""
Posterior-expected losses and the choice of the returned iteration.

For f(x) ~ N(mu, sigma^2) and alpha = (mu - theta) / sigma,

    E[loss | x in L] = sigma (phi(alpha) + alpha Phi(alpha))
    E[loss | x in H] = sigma (phi(alpha) - alpha (1 - Phi(alpha)))

and with sigma = 0 the loss is deterministic.
"""

import logging
from typing import Sequence, Union

import numpy as np
from scipy.stats import norm

from ..gp import Posterior, posterior_mean_var, sample_paths
from ..gp.kernels import as_points
from ..rng import RngState
from .classification import Classification, Side
from .losses import LengthMismatchError

logger = logging.getLogger(__name__)


def _expected_loss(mu, sigma, theta: float, high) -> np.ndarray:
    mu = np.asarray(mu, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    high = np.asarray(high, dtype=bool)
    positive = sigma > 0
    safe = np.where(positive, sigma, 1.0)
    alpha = (mu - theta) / safe
    pdf = norm.pdf(alpha)
    low_side = safe * (pdf + alpha * norm.cdf(alpha))
    high_side = safe * (pdf - alpha * norm.sf(alpha))
    smooth = np.where(high, high_side, low_side)
    limit = np.where(high, np.maximum(theta - mu, 0.0), np.maximum(mu - theta, 0.0))
    # round-off can push the tails slightly below zero
    return np.where(positive, np.maximum(smooth, 0.0), limit)


def expected_loss_closed_form(mu: float, sigma: float, theta: float, side: Side) -> float:
    """Expected misclassification loss of one point under N(mu, sigma^2)."""
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    if side not in ("H", "L"):
        raise ValueError(f"side must be 'H' or 'L', got {side!r}")
    return float(_expected_loss(mu, sigma, theta, side == "H"))


def expected_avg_loss(post: Posterior, classification: Classification, xs, theta: float) -> float:
    """Average expected loss of a (possibly older) classification under ``post``."""
    points = as_points(xs)
    if points.shape[0] != len(classification):
        raise LengthMismatchError(
            f"classification covers {len(classification)} points, xs has {points.shape[0]}"
        )
    mean, var = posterior_mean_var(post, points)
    return float(np.mean(_expected_loss(mean, np.sqrt(var), theta, classification.high)))


Stored = Union[Sequence[Classification], np.ndarray]


def _membership_matrix(stored: Stored, n_points: int) -> np.ndarray:
    if isinstance(stored, np.ndarray):
        matrix = np.atleast_2d(stored.astype(bool))
    else:
        matrix = np.vstack([c.high for c in stored]) if len(stored) else np.zeros((0, n_points), bool)
    if matrix.shape[0] == 0:
        raise ValueError("no stored classifications")
    if matrix.shape[1] != n_points:
        raise LengthMismatchError(
            f"stored classifications cover {matrix.shape[1]} points, xs has {n_points}"
        )
    return matrix


def expected_max_losses(
    post: Posterior,
    stored: Stored,
    xs,
    theta: float,
    m: int,
    rng: RngState,
) -> np.ndarray:
    """
    Monte-Carlo mean of the max-value loss of each stored classification,
    over ``m`` posterior sample paths shared by all of them.
    """
    points = as_points(xs)
    memberships = _membership_matrix(stored, points.shape[0])
    paths = sample_paths(post, points, m, rng)
    excess = paths - theta
    below = np.maximum(-excess, 0.0)
    above = np.maximum(excess, 0.0)
    means = np.empty(memberships.shape[0])
    for i, high in enumerate(memberships):
        losses = np.where(high[None, :], below, above)
        means[i] = losses.max(axis=1).mean()
    return means


def estimate_t_check(
    post: Posterior,
    stored: Stored,
    xs,
    theta: float,
    m: int,
    rng: RngState,
) -> int:
    """
    Iteration (1-based) whose stored classification has the smallest
    estimated expected max-value loss; ties go to the latest iteration.

    Args:
        post: Posterior after the last observation
        stored: Classifications H_1..H_T, or a (T, n) boolean matrix
        xs: Points the classifications cover
        theta: Threshold
        m: Number of posterior sample paths
        rng: Stream the sample paths are drawn from

    Returns:
        t_check in 1..T
    """
    means = expected_max_losses(post, stored, xs, theta, m, rng)
    best = float(means.min())
    t_check = int(np.flatnonzero(means == best)[-1]) + 1
    logger.debug(f"t_check={t_check} of {means.shape[0]} (expected max loss {best:.6g})")
    return t_check
