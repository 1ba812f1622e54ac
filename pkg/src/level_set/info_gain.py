"""
Greedy estimate of the maximum information gain

    gamma_t = 1/2 max_{x_1..x_t} log det(I + noise^-1 K_t).

Each step adds the candidate with the largest current posterior variance,
which maximises the log-det increment 1/2 log(1 + var / noise). Points may
repeat. By submodularity the greedy value is at least (1 - 1/e) gamma_t.
"""

import numpy as np

from ..gp.kernels import as_points, kernel_diag, kernel_matrix
from ..models.kernel import KernelSpec

GREEDY_FACTOR = 1.0 - np.exp(-1.0)


def info_gain_greedy(kernel: KernelSpec, candidates, noise_var: float, t: int) -> np.ndarray:
    """
    Cumulative greedy information gains.

    Args:
        kernel: Prior covariance
        candidates: Finite set the greedy picks come from
        noise_var: Observation noise variance, > 0
        t: Horizon

    Returns:
        Array of length t holding gamma_1..gamma_t; divide by 1 - 1/e for an
        upper bound on the exact maximum gain
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if noise_var <= 0:
        raise ValueError(f"information gain needs noise_var > 0, got {noise_var}")
    points = as_points(candidates)
    n = points.shape[0]
    if n == 0:
        raise ValueError("candidate set is empty")

    var = kernel_diag(kernel, points).astype(float)
    factors = np.zeros((t, n))
    gains = np.empty(t)
    total = 0.0
    for step in range(t):
        j = int(np.argmax(var))
        v_j = max(var[j], 0.0)
        total += 0.5 * np.log1p(v_j / noise_var)
        gains[step] = total

        column = kernel_matrix(kernel, points, points[j])[:, 0]
        column -= factors[:step].T @ factors[:step, j]
        factors[step] = column / np.sqrt(v_j + noise_var)
        var = np.maximum(var - factors[step] ** 2, 0.0)
    return gains
