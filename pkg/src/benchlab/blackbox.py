"""
Black-box targets and the observation model y = f(x) + eps,
eps ~ N(0, noise_variance).
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from ..gp import Dataset, fit_posterior, sample_paths
from ..gp.kernels import as_points
from ..models.kernel import KernelSpec
from ..rng import RngState
from .functions import ANALYTIC_FUNCTIONS, get_function
from .grids import make_grid

logger = logging.getLogger(__name__)

CASE1_KERNEL = KernelSpec(variant="gaussian", amplitude=1.0, lengthscale=2.0)


class NotTabulatedError(KeyError):
    """Raised when a tabulated black box is queried off its own points."""
    pass


class BlackBox:
    """Base class: ``evaluate`` returns noiseless f values for a point set."""

    kind: str = "abstract"

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def evaluate(self, xs) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, x):
        values = self.evaluate(as_points(x))
        return float(values[0]) if np.asarray(x).ndim == 1 else values

    def observe(self, x, noise_variance: float, rng: RngState) -> float:
        """One noisy observation at a single point."""
        return observe_value(float(self.evaluate(as_points(x))[0]), noise_variance, rng)


def observe_value(f_val: float, noise_variance: float, rng: RngState) -> float:
    """f + sqrt(noise) * z; no draw is consumed when the noise is zero."""
    if noise_variance < 0:
        raise ValueError(f"noise_variance must be >= 0, got {noise_variance}")
    if noise_variance == 0:
        return float(f_val)
    return float(f_val + np.sqrt(noise_variance) * rng.standard_normal())


class AnalyticBlackBox(BlackBox):
    """A closed-form test function by name."""

    kind = "analytic"

    def __init__(self, name: str):
        self.name = name
        self._func = get_function(name)
        self._dim = ANALYTIC_FUNCTIONS[name]["dim"]

    def __repr__(self) -> str:
        return f"AnalyticBlackBox({self.name!r})"

    @property
    def dim(self) -> int:
        return self._dim

    def evaluate(self, xs) -> np.ndarray:
        return np.asarray(self._func(as_points(xs)), dtype=float)


class TabulatedBlackBox(BlackBox):
    """
    Values known on a finite point set only.

    Lookups are exact on the stored coordinates; anything else raises
    NotTabulatedError.
    """

    kind = "tabulated"

    def __init__(self, points, values):
        self.points = as_points(points).copy()
        self.values = np.asarray(values, dtype=float).ravel().copy()
        if self.points.shape[0] != self.values.shape[0]:
            raise ValueError(
                f"{self.points.shape[0]} points but {self.values.shape[0]} values"
            )
        self.points.setflags(write=False)
        self.values.setflags(write=False)
        self._index: Dict[Tuple[float, ...], int] = {}
        for i, p in enumerate(self.points):
            key = tuple(p.tolist())
            if key in self._index:
                raise ValueError(f"duplicate tabulated point {key}")
            self._index[key] = i

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def index_of(self, x) -> int:
        key = tuple(np.asarray(x, dtype=float).ravel().tolist())
        try:
            return self._index[key]
        except KeyError:
            raise NotTabulatedError(f"point {key} is not one of the tabulated points") from None

    def evaluate(self, xs) -> np.ndarray:
        points = as_points(xs)
        return np.array([self.values[self.index_of(p)] for p in points])


def gen_gp_sample_case1(
    rng: RngState,
    grid: Optional[np.ndarray] = None,
    kernel: Optional[KernelSpec] = None,
) -> TabulatedBlackBox:
    """
    One draw of a zero-mean GP tabulated on ``grid``.

    Defaults to the 50 x 50 lattice over [-5, 5]^2 and the kernel
    exp(-||x - x'||^2 / 2). The draw is frozen: evaluating the returned black
    box never touches ``rng`` again.
    """
    if grid is None:
        grid = make_grid(-5.0, 5.0, -5.0, 5.0, 50, 50)
    kernel = kernel or CASE1_KERNEL
    points = as_points(grid)
    prior = fit_posterior(Dataset.empty(points.shape[1], 0.0), kernel)
    values = sample_paths(prior, points, 1, rng)[0]
    logger.debug(f"drew a GP sample path on {points.shape[0]} points")
    return TabulatedBlackBox(points, values)
