"""
Closed-form test functions, shifted and negated so that the super-level set
of interest is a bounded region.

Every function accepts a single point (1-D) or a point set (n, d) and
returns a float or an array of n values.
"""

from typing import Callable, Dict, Optional

import numpy as np


class FunctionDimensionError(ValueError):
    """Raised when a point does not have the dimension a function is defined on."""
    pass


def _points(x, dim: Optional[int], name: str):
    arr = np.asarray(x, dtype=float)
    single = arr.ndim == 1
    points = arr.reshape(1, -1) if single else arr
    if points.ndim != 2:
        raise FunctionDimensionError(f"{name}: expected a point or an (n, d) array, got shape {arr.shape}")
    if dim is not None and points.shape[1] != dim:
        raise FunctionDimensionError(f"{name} is defined for d = {dim}, got d = {points.shape[1]}")
    return points, single


def _out(values: np.ndarray, single: bool):
    return float(values[0]) if single else values


def eval_sinusoidal(x):
    """sin(10 x1) + cos(4 x2) - cos(3 x1 x2)."""
    p, single = _points(x, 2, "sinusoidal")
    x1, x2 = p[:, 0], p[:, 1]
    return _out(np.sin(10.0 * x1) + np.cos(4.0 * x2) - np.cos(3.0 * x1 * x2), single)


def eval_himmelblau(x):
    """-(x1^2 + x2 - 11)^2 - (x1 + x2^2 - 7)^2 + 100."""
    p, single = _points(x, 2, "himmelblau")
    x1, x2 = p[:, 0], p[:, 1]
    return _out(-((x1 ** 2 + x2 - 11.0) ** 2) - (x1 + x2 ** 2 - 7.0) ** 2 + 100.0, single)


def eval_sphere(x):
    """41.65518 - sum x_i^2 on R^5."""
    p, single = _points(x, 5, "sphere")
    return _out(41.65518 - np.sum(p ** 2, axis=1), single)


def eval_rosenbrock(x):
    """53458.91 - sum [100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2] on R^5."""
    p, single = _points(x, 5, "rosenbrock")
    head, tail = p[:, :-1], p[:, 1:]
    total = np.sum(100.0 * (tail - head ** 2) ** 2 + (1.0 - head) ** 2, axis=1)
    return _out(53458.91 - total, single)


def eval_styblinski_tang(x):
    """-20.8875 - sum (x_i^4 - 16 x_i^2 + 5 x_i) / 2 on R^5."""
    p, single = _points(x, 5, "styblinski_tang")
    return _out(-20.8875 - np.sum(p ** 4 - 16.0 * p ** 2 + 5.0 * p, axis=1) / 2.0, single)


ANALYTIC_FUNCTIONS: Dict[str, Dict] = {
    "sinusoidal": {"func": eval_sinusoidal, "dim": 2, "bounds": [(0.0, 1.0), (0.0, 2.0)]},
    "himmelblau": {"func": eval_himmelblau, "dim": 2, "bounds": [(-5.0, 5.0), (-5.0, 5.0)]},
    "sphere": {"func": eval_sphere, "dim": 5, "bounds": [(-5.0, 5.0)] * 5},
    "rosenbrock": {"func": eval_rosenbrock, "dim": 5, "bounds": [(-5.0, 5.0)] * 5},
    "styblinski_tang": {"func": eval_styblinski_tang, "dim": 5, "bounds": [(-5.0, 5.0)] * 5},
}


def get_function(name: str) -> Callable:
    try:
        return ANALYTIC_FUNCTIONS[name]["func"]
    except KeyError:
        raise ValueError(
            f"unknown test function '{name}'; available: {', '.join(sorted(ANALYTIC_FUNCTIONS))}"
        ) from None
