"""
Acquisition scores.

Every score is a pure function of the posterior moments at the candidates
and, for the confidence-bound rules, one beta_t shared by all candidates.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from scipy.linalg import solve_triangular
from scipy.special import ndtr

from ..gp import Posterior, kernel_matrix, posterior_mean_var
from ..gp.kernels import as_points

logger = logging.getLogger(__name__)

DEFAULT_MILE_CHUNK = 512


class IntersectionUnavailableError(ValueError):
    """Raised when running bounds are requested without a persistent candidate set."""
    pass


@dataclass(frozen=True)
class ConfidenceBand:
    """
    Pointwise credible band mu +- beta^(1/2) sigma.

    ``tilde_ucb``/``tilde_lcb`` hold the running intersection over past
    iterations when an IntersectionTracker produced the band.
    """

    mean: np.ndarray
    sd: np.ndarray
    beta_sqrt: float
    ucb: np.ndarray
    lcb: np.ndarray
    tilde_ucb: Optional[np.ndarray] = None
    tilde_lcb: Optional[np.ndarray] = None

    @property
    def width(self) -> np.ndarray:
        return self.ucb - self.lcb


def band_from_moments(mean, var, beta_sqrt: float) -> ConfidenceBand:
    if beta_sqrt < 0:
        raise ValueError(f"beta_sqrt must be >= 0, got {beta_sqrt}")
    mean = np.atleast_1d(np.asarray(mean, dtype=float))
    sd = np.sqrt(np.maximum(np.atleast_1d(np.asarray(var, dtype=float)), 0.0))
    half = beta_sqrt * sd
    return ConfidenceBand(mean=mean, sd=sd, beta_sqrt=float(beta_sqrt), ucb=mean + half, lcb=mean - half)


def confidence_band(post: Posterior, xs, beta_sqrt: float) -> ConfidenceBand:
    """ucb = mu + beta^(1/2) sigma and lcb = mu - beta^(1/2) sigma at every point of ``xs``."""
    mean, var = posterior_mean_var(post, as_points(xs))
    return band_from_moments(mean, var, beta_sqrt)


def randomized_straddle_score(band: ConfidenceBand, theta: float) -> np.ndarray:
    """a(x) = max{min{ucb - theta, theta - lcb}, 0}."""
    return np.maximum(np.minimum(band.ucb - theta, theta - band.lcb), 0.0)


def straddle_from_moments(mean, sd, theta: float, beta_sqrt: float) -> np.ndarray:
    return beta_sqrt * np.asarray(sd, dtype=float) - np.abs(np.asarray(mean, dtype=float) - theta)


def straddle_score(post: Posterior, xs, theta: float, beta_sqrt: float) -> np.ndarray:
    """Straddle beta^(1/2) sigma - |mu - theta|; may be negative."""
    if beta_sqrt < 0:
        raise ValueError(f"beta_sqrt must be >= 0, got {beta_sqrt}")
    mean, var = posterior_mean_var(post, as_points(xs))
    return straddle_from_moments(mean, np.sqrt(var), theta, beta_sqrt)


class IntersectionTracker:
    """
    Running intersection of confidence bands on a fixed candidate set.

    tilde_ucb only decreases and tilde_lcb only increases from one update to
    the next.
    """

    def __init__(self, n_points: int):
        self.n_points = int(n_points)
        self.tilde_ucb = np.full(self.n_points, np.inf)
        self.tilde_lcb = np.full(self.n_points, -np.inf)
        self.updates = 0

    def update(self, band: ConfidenceBand) -> ConfidenceBand:
        if band.ucb.shape[0] != self.n_points:
            raise IntersectionUnavailableError(
                f"band covers {band.ucb.shape[0]} points but the tracker holds {self.n_points}; "
                f"running bounds need the same candidate set every iteration"
            )
        self.tilde_ucb = np.minimum(self.tilde_ucb, band.ucb)
        self.tilde_lcb = np.maximum(self.tilde_lcb, band.lcb)
        self.updates += 1
        return replace(band, tilde_ucb=self.tilde_ucb.copy(), tilde_lcb=self.tilde_lcb.copy())


def lse_score(band: ConfidenceBand, theta: float, use_intersection: bool) -> np.ndarray:
    """Ambiguity min{ucb - theta, theta - lcb}, on running bounds when requested."""
    if use_intersection:
        if band.tilde_ucb is None or band.tilde_lcb is None:
            raise IntersectionUnavailableError(
                "use_intersection needs running bounds from an IntersectionTracker "
                "over a persistent finite candidate set"
            )
        upper, lower = band.tilde_ucb, band.tilde_lcb
    else:
        upper, lower = band.ucb, band.lcb
    return np.minimum(upper - theta, theta - lower)


def mile_score(
    post: Posterior,
    xs,
    theta: float,
    beta_sqrt: float = 0.0,
    chunk_size: int = DEFAULT_MILE_CHUNK,
) -> np.ndarray:
    """
    Expected size of the next super-level set for every candidate query.

    After observing y at x, the posterior mean at x' is Gaussian with mean
    mu(x') and standard deviation nu = |cov(x', x)| / sqrt(var(x) + noise).
    The score of x is sum over x' of P(mu_next(x') - beta^(1/2) sigma_next(x') >= theta),
    where sigma_next is the (deterministic) posterior sd after the query.
    ``xs`` is both the candidate set and the set being counted.
    """
    points = as_points(xs)
    n = points.shape[0]
    mean, var = posterior_mean_var(post, points)
    noise = post.noise_variance

    if post.size:
        whitened = solve_triangular(
            post.chol,
            kernel_matrix(post.kernel, post.dataset.inputs, points),
            lower=True,
            check_finite=False,
        )
    else:
        whitened = np.zeros((0, n))

    scores = np.empty(n)
    step = max(1, int(chunk_size))
    for start in range(0, n, step):
        stop = min(start + step, n)
        # columns: candidate queries x, rows: counted points x'
        cov = kernel_matrix(post.kernel, points, points[start:stop])
        cov -= whitened.T @ whitened[:, start:stop]
        denom = var[start:stop] + noise
        safe = np.where(denom > 0, denom, 1.0)
        informative = denom > 0
        cov = np.where(informative[None, :], cov, 0.0)

        nu = np.abs(cov) / np.sqrt(safe)[None, :]
        centre = mean[:, None] - theta
        if beta_sqrt > 0:
            var_next = np.maximum(var[:, None] - cov ** 2 / safe[None, :], 0.0)
            centre = centre - beta_sqrt * np.sqrt(var_next)

        positive = nu > 0
        with np.errstate(divide="ignore", invalid="ignore"):
            prob = np.where(
                positive,
                ndtr(centre / np.where(positive, nu, 1.0)),
                (centre >= 0).astype(float),
            )
        scores[start:stop] = prob.sum(axis=0)

    return scores
