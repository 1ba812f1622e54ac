"""
Covariance functions.

Point sets are 2-D arrays of shape (n, d). A 1-D array is read as a single
point of dimension d.
"""

import numpy as np
from scipy.spatial.distance import cdist

from ..models.kernel import KernelSpec

SQRT3 = np.sqrt(3.0)


class DimensionMismatchError(ValueError):
    """Raised when two point sets do not share a dimension."""
    pass


def as_points(x) -> np.ndarray:
    """Coerce a point or a point set to a float array of shape (n, d)."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 1:
        return arr.reshape(1, -1)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"expected a point or an (n, d) array, got shape {arr.shape}")
    return arr


def kernel_matrix(kernel: KernelSpec, x1, x2) -> np.ndarray:
    """Cross-covariance matrix k(x1_i, x2_j)."""
    a = as_points(x1)
    b = as_points(x2)
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatchError(
            f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}"
        )
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[0]))

    if kernel.variant == "gaussian":
        sq = cdist(a, b, "sqeuclidean")
        return kernel.amplitude * np.exp(-sq / kernel.lengthscale)

    scaled = SQRT3 * cdist(a, b, "euclidean") / kernel.lengthscale
    return kernel.amplitude * (1.0 + scaled) * np.exp(-scaled)


def kernel_diag(kernel: KernelSpec, x) -> np.ndarray:
    """k(x_i, x_i) for every point; constant for stationary kernels."""
    return np.full(as_points(x).shape[0], kernel.amplitude)


def kernel_eval(kernel: KernelSpec, x, x_prime) -> float:
    """Covariance between two single points."""
    a = np.asarray(x, dtype=float).ravel()
    b = np.asarray(x_prime, dtype=float).ravel()
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimension mismatch: {a.size} vs {b.size}")
    return float(kernel_matrix(kernel, a, b)[0, 0])
