"""
Confidence-parameter schedules.

All functions return beta_t itself except beta_lse_theoretical, which
returns beta_t^(1/2) as it is usually quoted.
"""

import math
from typing import Optional

import numpy as np

from ..discretize import GridSpec, tau_t
from ..rng import RngState


def chi2_from_uniform(u):
    """Inverse transform of the chi-squared law with two degrees of freedom."""
    return -2.0 * np.log(u)


def sample_beta_chi2(rng: RngState, size: Optional[int] = None):
    """beta ~ chi2(2) as -2 ln U with U uniform on (0, 1]."""
    beta = chi2_from_uniform(rng.uniform_open_closed(size))
    if size is None:
        return float(beta)
    return beta


def beta_lse_theoretical(n_candidates: float, t: int, delta: float) -> float:
    """beta_t^(1/2) = sqrt(2 log(|X| pi^2 t^2 / (6 delta)))."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if n_candidates < 1:
        raise ValueError(f"n_candidates must be >= 1, got {n_candidates}")
    return math.sqrt(2.0 * math.log(n_candidates * math.pi ** 2 * t * t / (6.0 * delta)))


def beta_maxloss_finite(n_candidates: int, rng: RngState) -> float:
    """xi + 2 log |X| with xi ~ chi2(2)."""
    if n_candidates < 1:
        raise ValueError(f"n_candidates must be >= 1, got {n_candidates}")
    return sample_beta_chi2(rng) + 2.0 * math.log(n_candidates)


def maxloss_infinite_shift(a: float, b: float, r: float, d: int, t: int) -> float:
    """2 log |X_t| = 2 d log tau_t."""
    return 2.0 * d * math.log(tau_t(GridSpec(a=a, b=b, r=r, d=d), t))


def beta_maxloss_infinite(a: float, b: float, r: float, d: int, t: int, rng: RngState) -> float:
    """2 d log tau_t + xi with xi ~ chi2(2)."""
    shift = maxloss_infinite_shift(a, b, r, d, t)
    return shift + sample_beta_chi2(rng)
