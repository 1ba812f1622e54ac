"""Finite candidate grids and uniform point sets."""

import numpy as np

from ..rng import RngState


class DegenerateBoundsError(ValueError):
    """Raised for empty or inverted intervals."""
    pass


def make_grid(l1: float, u1: float, l2: float, u2: float, n1: int = 50, n2: int = 50) -> np.ndarray:
    """
    Uniform n1 x n2 lattice over [l1, u1] x [l2, u2], endpoints included.

    Points are ordered with x1 varying slowest; spacing is (u - l) / (n - 1).
    """
    if n1 < 2 or n2 < 2:
        raise ValueError(f"need at least 2 points per axis, got {n1} x {n2}")
    if not (l1 < u1 and l2 < u2):
        raise DegenerateBoundsError(f"degenerate bounds [{l1}, {u1}] x [{l2}, {u2}]")
    axis1 = np.linspace(l1, u1, n1)
    axis2 = np.linspace(l2, u2, n2)
    g1, g2 = np.meshgrid(axis1, axis2, indexing="ij")
    return np.column_stack([g1.ravel(), g2.ravel()])


def uniform_box(bounds, n: int, rng: RngState) -> np.ndarray:
    """``n`` uniform points in the axis-aligned box ``bounds``."""
    lows = np.array([b[0] for b in bounds], dtype=float)
    highs = np.array([b[1] for b in bounds], dtype=float)
    if np.any(lows >= highs):
        raise DegenerateBoundsError(f"degenerate box {list(bounds)}")
    return rng.uniform(lows, highs, size=(n, lows.shape[0]))
