"""
Per-iteration lattices for the max-value loss on continuous domains.

With derivative tail constants (a, b), a domain inside [0, r]^d and
iteration t, the per-axis resolution is

    tau_t = ceil(b d r t^2 (sqrt(log(a d)) + sqrt(pi) / 2))

and X_t is the tau_t^d lattice of cell centres ((k + 1/2) r / tau_t). Every
x in the box is then within L1 distance d r / (2 tau_t) <= d r / tau_t of
its nearest lattice point [x]_t.
"""

import math
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

DEFAULT_GRID_CAP = 10_000_000


class AssumptionError(ValueError):
    """Raised when the smoothness constants fall outside their valid range."""
    pass


class GridCapacityError(ValueError):
    """Raised when a lattice would exceed the configured memory cap."""
    pass


class OutsideBoxError(ValueError):
    """Raised for points outside [0, r]^d."""
    pass


class GridSpec(BaseModel):
    """Smoothness constants and the enclosing cube [0, r]^d."""

    model_config = ConfigDict(frozen=True)

    a: float = Field(..., gt=0, description="Tail constant a of the derivative bound")
    b: float = Field(..., gt=0, description="Scale constant b of the derivative bound")
    r: float = Field(..., gt=0, description="Side of the cube [0, r]^d")
    d: int = Field(..., ge=1, description="Input dimension")


@dataclass(frozen=True)
class DiscretizationState:
    """
    The lattice X_t. ``grid`` is only materialised by build_grid; the nearest
    point map works from (spec, tau) alone.
    """

    spec: GridSpec
    t: int
    tau: int
    grid: np.ndarray = None

    @property
    def spacing(self) -> float:
        return self.spec.r / self.tau

    @property
    def size(self) -> int:
        return self.tau ** self.spec.d

    def axis_points(self) -> np.ndarray:
        return (np.arange(self.tau) + 0.5) * self.spacing

    def covering_radius(self) -> float:
        """Guaranteed L1 covering radius d r / tau_t."""
        return self.spec.d * self.spec.r / self.tau


def tau_t(spec: GridSpec, t: int) -> int:
    """Per-axis resolution at iteration t (t >= 1)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    ad = spec.a * spec.d
    if ad < 1:
        raise AssumptionError(
            f"a * d = {ad:g} < 1: sqrt(log(a d)) is undefined, the derivative tail "
            f"assumption cannot be applied with these constants"
        )
    scale = spec.b * spec.d * spec.r * t * t
    return int(math.ceil(scale * (math.sqrt(math.log(ad)) + math.sqrt(math.pi) / 2.0)))


def discretization(spec: GridSpec, t: int) -> DiscretizationState:
    """Lattice description without enumerating its points."""
    return DiscretizationState(spec=spec, t=t, tau=tau_t(spec, t))


def build_grid(spec: GridSpec, t: int, cap: int = DEFAULT_GRID_CAP) -> DiscretizationState:
    """Enumerate X_t in lexicographic order (first coordinate slowest)."""
    state = discretization(spec, t)
    if state.size > cap:
        raise GridCapacityError(
            f"lattice at t={t} has tau^d = {state.tau}^{spec.d} = {state.size:,} points, "
            f"above the cap of {cap:,}; use a smaller d or t, or raise the cap"
        )
    axes = [state.axis_points()] * spec.d
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=1)
    return DiscretizationState(spec=spec, t=t, tau=state.tau, grid=points)


def _axis_indices(state: DiscretizationState, coords: np.ndarray) -> np.ndarray:
    """
    Per-axis index of the nearest cell centre; on an exact tie the smaller
    centre wins.
    """
    h = state.spacing
    base = np.clip(np.floor(coords / h - 0.5).astype(int), 0, state.tau - 1)
    best = base.copy()
    best_dist = np.abs(coords - (base + 0.5) * h)
    for offset in (-1, 1):
        cand = np.clip(base + offset, 0, state.tau - 1)
        dist = np.abs(coords - (cand + 0.5) * h)
        better = (dist < best_dist) | ((dist == best_dist) & (cand < best))
        best = np.where(better, cand, best)
        best_dist = np.where(better, dist, best_dist)
    return best


def _checked(state: DiscretizationState, xs) -> np.ndarray:
    points = np.atleast_2d(np.asarray(xs, dtype=float))
    if points.shape[1] != state.spec.d:
        raise ValueError(f"expected dimension {state.spec.d}, got {points.shape[1]}")
    r = state.spec.r
    if np.any(points < 0) or np.any(points > r):
        raise OutsideBoxError(f"points must lie in [0, {r:g}]^{state.spec.d}")
    return points


def nearest_indices(state: DiscretizationState, xs) -> np.ndarray:
    """
    Flat lattice index of [x]_t for every row of ``xs`` (enumerable lattices).

    The L1 distance separates over axes on a product lattice, so the
    lexicographically smallest minimiser is the per-axis smallest minimiser.
    """
    points = _checked(state, xs)
    idx = _axis_indices(state, points)
    weights = state.tau ** np.arange(state.spec.d - 1, -1, -1)
    return idx @ weights


def snap_to_grid(state: DiscretizationState, xs) -> np.ndarray:
    """Coordinates of [x]_t for every row of ``xs``."""
    points = _checked(state, xs)
    return (_axis_indices(state, points) + 0.5) * state.spacing


def nearest_in_grid(state: DiscretizationState, x) -> np.ndarray:
    """Nearest lattice point to a single x (L1 distance, lexicographic ties)."""
    return snap_to_grid(state, np.asarray(x, dtype=float).reshape(1, -1))[0]
