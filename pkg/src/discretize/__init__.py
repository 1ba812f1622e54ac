"""Lattice discretizations for the max-value loss on continuous domains."""

from .grid import (
    AssumptionError,
    DiscretizationState,
    GridCapacityError,
    GridSpec,
    OutsideBoxError,
    build_grid,
    discretization,
    nearest_in_grid,
    nearest_indices,
    snap_to_grid,
    tau_t,
)

__all__ = [
    "AssumptionError",
    "DiscretizationState",
    "GridCapacityError",
    "GridSpec",
    "OutsideBoxError",
    "build_grid",
    "discretization",
    "nearest_in_grid",
    "nearest_indices",
    "snap_to_grid",
    "tau_t",
]
