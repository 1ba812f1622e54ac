"""Exact Gaussian-process regression."""

from .kernels import DimensionMismatchError, kernel_eval, kernel_matrix
from .posterior import (
    ConditioningError,
    Dataset,
    Posterior,
    fit_posterior,
    posterior_cov,
    posterior_mean_var,
    update_posterior,
)
from .sampling import sample_paths

__all__ = [
    "ConditioningError",
    "Dataset",
    "DimensionMismatchError",
    "Posterior",
    "fit_posterior",
    "kernel_eval",
    "kernel_matrix",
    "posterior_cov",
    "posterior_mean_var",
    "sample_paths",
    "update_posterior",
]
