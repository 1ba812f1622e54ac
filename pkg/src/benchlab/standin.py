"""
Synthetic lifetime maps in the ingestion format.

The measured maps are not distributed, so pipeline tests and the bundled
real-data config use a stand-in with the same layout: an 89 x 74 lattice
with coordinates 2a + 6 (a = 1, 2, ...) and lifetimes in [0.091587, 7.4613].
"""

import csv
import logging
from pathlib import Path
from typing import Tuple, Union

import numpy as np

from ..rng import RngState

logger = logging.getLogger(__name__)

LIFETIME_SHAPE = (89, 74)
LIFETIME_MIN = 0.091587
LIFETIME_MAX = 7.4613
LIFETIME_HEADER = ("x1", "x2", "lifetime")


def lifetime_axes(shape: Tuple[int, int] = LIFETIME_SHAPE) -> Tuple[np.ndarray, np.ndarray]:
    """Coordinate values 2a + 6, a = 1..n, per axis."""
    return tuple(2.0 * np.arange(1, n + 1) + 6.0 for n in shape)


def lifetime_lattice(shape: Tuple[int, int] = LIFETIME_SHAPE) -> np.ndarray:
    """All lattice coordinates, x1 varying slowest."""
    ax1, ax2 = lifetime_axes(shape)
    g1, g2 = np.meshgrid(ax1, ax2, indexing="ij")
    return np.column_stack([g1.ravel(), g2.ravel()])


def generate_lifetime_standin(
    seed: int = 0,
    shape: Tuple[int, int] = LIFETIME_SHAPE,
    n_bumps: int = 12,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    A smooth random lifetime map: a sum of Gaussian bumps over the lattice,
    min-max scaled to [LIFETIME_MIN, LIFETIME_MAX].

    Returns (points, lifetimes).
    """
    rng = RngState(seed)
    points = lifetime_lattice(shape)
    lows = points.min(axis=0)
    highs = points.max(axis=0)

    centres = rng.uniform(lows, highs, size=(n_bumps, 2))
    widths = rng.uniform(10.0, 40.0, size=n_bumps)
    heights = rng.uniform(-1.0, 1.0, size=n_bumps)

    sq = ((points[:, None, :] - centres[None, :, :]) ** 2).sum(axis=2)
    surface = (heights[None, :] * np.exp(-sq / (2.0 * widths[None, :] ** 2))).sum(axis=1)

    span = surface.max() - surface.min()
    scaled = (surface - surface.min()) / span if span > 0 else np.zeros_like(surface)
    lifetimes = LIFETIME_MIN + scaled * (LIFETIME_MAX - LIFETIME_MIN)
    logger.debug(f"stand-in lifetime map: {points.shape[0]} points, seed {seed}")
    return points, lifetimes


def write_lifetime_csv(path: Union[str, Path], points, lifetimes) -> Path:
    """Write (x1, x2, lifetime) rows with a header, LF line endings."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    points = np.asarray(points, dtype=float)
    lifetimes = np.asarray(lifetimes, dtype=float)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(LIFETIME_HEADER)
        for (x1, x2), value in zip(points, lifetimes):
            writer.writerow([_coord(x1), _coord(x2), repr(float(value))])
    return path


def _coord(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))
