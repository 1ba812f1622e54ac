"""Split of the evaluation points into the estimated super- and sub-level sets."""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..gp import Posterior, posterior_mean_var
from ..gp.kernels import as_points

Side = Literal["H", "L"]


@dataclass(frozen=True)
class Classification:
    """
    ``high[i]`` is True when point i is in H_t, False when it is in L_t.
    Every point is in exactly one of the two sets.
    """

    theta: float
    high: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "high", np.asarray(self.high, dtype=bool).ravel())

    def __len__(self) -> int:
        return self.high.shape[0]

    @property
    def n_high(self) -> int:
        return int(self.high.sum())

    def side(self, i: int) -> Side:
        return "H" if self.high[i] else "L"


def classify_mean(mean, theta: float) -> Classification:
    """H iff mu >= theta."""
    return Classification(theta=float(theta), high=np.asarray(mean, dtype=float) >= theta)


def classify(post: Posterior, xs, theta: float) -> Classification:
    """
    H_t = {x : mu_{t-1}(x) >= theta}; points with mu = theta go to H.

    Args:
        post: Posterior after t-1 observations
        xs: Points to classify
        theta: Threshold

    Returns:
        Classification of ``xs``
    """
    mean, _ = posterior_mean_var(post, as_points(xs))
    return classify_mean(mean, theta)
