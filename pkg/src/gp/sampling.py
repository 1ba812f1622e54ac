"""Sample paths of the prior or posterior GP restricted to a finite point set."""

import numpy as np

from ..rng import RngState
from .posterior import Posterior, cholesky_with_jitter, posterior_cov, posterior_mean_var


def sample_paths(post: Posterior, xs, m: int, rng: RngState) -> np.ndarray:
    """
    Draw ``m`` joint samples of f at ``xs``.

    Uses the Cholesky factor of the posterior covariance plus a nugget of at
    least 1e-10 * amplitude. A covariance that is identically zero yields copies of the mean.

    Args:
        post: Prior (empty dataset) or fitted posterior
        xs: Points to sample at
        m: Number of paths
        rng: Stream the normal draws come from

    Returns:
        Array of shape (m, len(xs))
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    mean, _ = posterior_mean_var(post, np.atleast_2d(np.asarray(xs, dtype=float)))
    cov = posterior_cov(post, xs)
    if not np.any(np.diag(cov) > 0):
        return np.tile(mean, (m, 1))

    factor, _ = cholesky_with_jitter(cov, post.kernel.amplitude, try_plain=False)
    z = rng.standard_normal((m, mean.shape[0]))
    return mean + z @ factor.T
