"""
Exact GP regression.

Given D_t = {(x_j, y_j)}, the posterior of a zero-mean GP is

    mu_t(x)      = k_t(x)^T (K_t + s^2 I)^-1 y_t
    sigma_t^2(x) = k(x, x) - k_t(x)^T (K_t + s^2 I)^-1 k_t(x)

computed through the lower Cholesky factor of K_t + s^2 I. With an empty
dataset the posterior is the prior: mean 0, variance k(x, x).
"""

import logging
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
from scipy.linalg import LinAlgError, cho_solve, cholesky, solve_triangular

from ..models.kernel import KernelSpec
from .kernels import DimensionMismatchError, as_points, kernel_diag, kernel_matrix

logger = logging.getLogger(__name__)

# Nugget ladder, relative to the kernel amplitude.
JITTER_START = 1e-10
JITTER_MAX = 1e-6

# Elements per temporary in posterior_mean_var.
QUERY_BLOCK = 1 << 22


class ConditioningError(Exception):
    """Raised when a covariance matrix stays indefinite after nugget escalation."""
    pass


@dataclass(frozen=True)
class Dataset:
    """Observed inputs, outputs and the observation-noise variance."""

    inputs: np.ndarray
    outputs: np.ndarray
    noise_variance: float

    def __post_init__(self):
        inputs = as_points(self.inputs) if np.size(self.inputs) else np.asarray(self.inputs, float)
        outputs = np.asarray(self.outputs, dtype=float).ravel()
        if inputs.ndim != 2:
            raise ValueError("inputs must be an (n, d) array")
        if inputs.shape[0] != outputs.shape[0]:
            raise ValueError(
                f"inputs and outputs differ in length: {inputs.shape[0]} vs {outputs.shape[0]}"
            )
        if self.noise_variance < 0:
            raise ValueError(f"noise_variance must be >= 0, got {self.noise_variance}")
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)

    @classmethod
    def empty(cls, dim: int, noise_variance: float) -> "Dataset":
        return cls(np.zeros((0, dim)), np.zeros(0), noise_variance)

    @property
    def size(self) -> int:
        return self.outputs.shape[0]

    @property
    def dim(self) -> int:
        return self.inputs.shape[1]

    def append(self, x, y: float) -> "Dataset":
        """New dataset with one more observation."""
        point = np.asarray(x, dtype=float).reshape(1, -1)
        if point.shape[1] != self.dim:
            raise DimensionMismatchError(f"dimension mismatch: {point.shape[1]} vs {self.dim}")
        return Dataset(
            np.vstack([self.inputs, point]),
            np.append(self.outputs, float(y)),
            self.noise_variance,
        )


@dataclass(frozen=True)
class Posterior:
    """
    Fitted GP state. Immutable; refits and updates return new values.

    ``chol_inv`` is the inverse of the lower Cholesky factor. Queries reduce
    against it row by row, so a point gets the same mean and variance
    whatever batch it is queried in.
    """

    dataset: Dataset
    kernel: KernelSpec
    chol: np.ndarray
    weights: np.ndarray
    nugget: float = 0.0
    _diag_noise: float = field(init=False, repr=False, default=0.0)
    chol_inv: np.ndarray = field(init=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_diag_noise", self.dataset.noise_variance + self.nugget)
        n = self.chol.shape[0]
        inverse = (
            solve_triangular(self.chol, np.eye(n), lower=True, check_finite=False)
            if n else np.zeros((0, 0))
        )
        object.__setattr__(self, "chol_inv", np.ascontiguousarray(inverse))

    @property
    def size(self) -> int:
        return self.dataset.size

    @property
    def noise_variance(self) -> float:
        return self.dataset.noise_variance


def cholesky_with_jitter(
    matrix: np.ndarray,
    amplitude: float,
    try_plain: bool = True,
) -> Tuple[np.ndarray, float]:
    """
    Lower Cholesky factor of ``matrix + nugget * I``.

    Tries nugget 0 first (when ``try_plain``), then JITTER_START * amplitude
    escalating by 10x up to JITTER_MAX * amplitude.
    """
    n = matrix.shape[0]
    ladder = []
    if try_plain:
        ladder.append(0.0)
    level = JITTER_START
    while level <= JITTER_MAX * (1 + 1e-9):
        ladder.append(level * amplitude)
        level *= 10.0

    eye = np.eye(n)
    for nugget in ladder:
        try:
            factor = cholesky(matrix + nugget * eye, lower=True, check_finite=False)
        except LinAlgError:
            continue
        if not np.all(np.isfinite(factor)):
            continue
        if nugget > 0:
            logger.debug(f"Cholesky needed nugget {nugget:.3e} on a {n}x{n} matrix")
        return factor, nugget

    raise ConditioningError(
        f"{n}x{n} covariance matrix is not positive definite even with nugget "
        f"{JITTER_MAX:g} * amplitude; the design is too ill-conditioned "
        f"(duplicate points with zero noise, or a lengthscale far larger than the spacing)"
    )


def fit_posterior(dataset: Dataset, kernel: KernelSpec) -> Posterior:
    """
    Fit the posterior from scratch.

    Args:
        dataset: Observed inputs, outputs and noise variance
        kernel: Prior covariance

    Returns:
        Posterior holding the Cholesky factor of K + noise I and its weights

    Raises:
        ConditioningError: If no nugget up to 1e-6 * amplitude makes the Gram matrix factorable
    """
    if dataset.size == 0:
        return Posterior(dataset, kernel, np.zeros((0, 0)), np.zeros(0))

    gram = kernel_matrix(kernel, dataset.inputs, dataset.inputs)
    gram[np.diag_indices_from(gram)] += dataset.noise_variance
    chol, nugget = cholesky_with_jitter(
        gram, kernel.amplitude, try_plain=dataset.noise_variance > 0
    )
    weights = cho_solve((chol, True), dataset.outputs, check_finite=False)
    return Posterior(dataset, kernel, chol, weights, nugget)


def update_posterior(post: Posterior, x, y: float) -> Posterior:
    """
    Add one observation by appending a row to the Cholesky factor.

    Falls back to a full refit when the new pivot is not positive.

    Args:
        post: Current posterior
        x: New input point
        y: Observed value at x

    Returns:
        A new Posterior; ``post`` is left unchanged
    """
    dataset = post.dataset.append(x, y)
    if post.size == 0:
        return fit_posterior(dataset, post.kernel)

    point = dataset.inputs[-1:]
    k_vec = kernel_matrix(post.kernel, post.dataset.inputs, point)[:, 0]
    row = solve_triangular(post.chol, k_vec, lower=True, check_finite=False)
    pivot_sq = post.kernel.amplitude + post._diag_noise - row @ row
    if not pivot_sq > JITTER_START * post.kernel.amplitude:
        logger.debug("rank-one update lost positivity; refitting")
        return fit_posterior(dataset, post.kernel)

    t = post.size
    chol = np.zeros((t + 1, t + 1))
    chol[:t, :t] = post.chol
    chol[t, :t] = row
    chol[t, t] = np.sqrt(pivot_sq)
    weights = cho_solve((chol, True), dataset.outputs, check_finite=False)
    return Posterior(dataset, post.kernel, chol, weights, post.nugget)


def posterior_mean_var(post: Posterior, x):
    """
    Posterior mean and variance.

    Every query row is reduced on its own (elementwise products summed along
    contiguous rows), so a batch result equals the pointwise loop bit for bit.
    Negative round-off in the variance is clamped to 0.

    Args:
        post: Fitted posterior
        x: A single point (1-D) or an (n, d) point set

    Returns:
        (mean, variance) as floats for a single point, arrays otherwise
    """
    single = np.asarray(x).ndim == 1
    points = as_points(x)
    if points.shape[1] != post.dataset.dim:
        raise DimensionMismatchError(
            f"query dimension {points.shape[1]} does not match data dimension {post.dataset.dim}"
        )

    prior_var = kernel_diag(post.kernel, points)
    if post.size == 0:
        mean = np.zeros(points.shape[0])
        var = prior_var
    else:
        cross = kernel_matrix(post.kernel, points, post.dataset.inputs)
        mean = (cross * post.weights).sum(axis=1)
        reduction = np.empty(points.shape[0])
        step = max(1, QUERY_BLOCK // (post.size * post.size))
        for start in range(0, points.shape[0], step):
            block = cross[start:start + step]
            v = (block[:, None, :] * post.chol_inv).sum(axis=2)
            reduction[start:start + step] = (v * v).sum(axis=1)
        var = np.maximum(prior_var - reduction, 0.0)

    if single:
        return float(mean[0]), float(var[0])
    return mean, var


def posterior_cov(post: Posterior, xs) -> np.ndarray:
    """
    Joint posterior covariance over a nonempty point set.

    Args:
        post: Fitted posterior
        xs: (n, d) point set, n >= 1

    Returns:
        Symmetric (n, n) covariance matrix
    """
    points = as_points(xs)
    if points.shape[0] == 0:
        raise ValueError("posterior_cov needs at least one query point")
    if points.shape[1] != post.dataset.dim:
        raise DimensionMismatchError(
            f"query dimension {points.shape[1]} does not match data dimension {post.dataset.dim}"
        )

    prior = kernel_matrix(post.kernel, points, points)
    if post.size == 0:
        return prior

    v = solve_triangular(
        post.chol,
        kernel_matrix(post.kernel, post.dataset.inputs, points),
        lower=True,
        check_finite=False,
    )
    cov = prior - v.T @ v
    cov = 0.5 * (cov + cov.T)
    diag = np.diag_indices_from(cov)
    cov[diag] = np.maximum(cov[diag], 0.0)
    return cov
