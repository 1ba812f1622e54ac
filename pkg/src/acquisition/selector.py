"""Next-point selection for every acquisition rule."""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..discretize import GridSpec
from ..gp import Posterior, posterior_mean_var
from ..gp.kernels import as_points
from ..models.acquisition import (
    AcquisitionSpec,
    LSERule,
    MILERule,
    RandStraddleMaxInfiniteRule,
    StraddleRule,
)
from ..rng import RngState
from .beta import (
    beta_lse_theoretical,
    beta_maxloss_finite,
    beta_maxloss_infinite,
    sample_beta_chi2,
)
from .scores import (
    DEFAULT_MILE_CHUNK,
    IntersectionTracker,
    IntersectionUnavailableError,
    band_from_moments,
    lse_score,
    mile_score,
    randomized_straddle_score,
    straddle_from_moments,
)

logger = logging.getLogger(__name__)


class UnsupportedRuleError(ValueError):
    """Raised when a rule cannot run on the given candidate set."""
    pass


class EmptyCandidateSetError(ValueError):
    """Raised when there is nothing left to select from."""
    pass


@dataclass(frozen=True)
class Selection:
    """Chosen candidate plus the beta_t drawn for it (NaN when the rule has none)."""

    index: int
    point: np.ndarray
    beta: float
    score: float


def draw_beta(
    spec: AcquisitionSpec,
    t: int,
    rng: RngState,
    domain_size: Optional[float] = None,
    grid_spec: Optional[GridSpec] = None,
) -> float:
    """
    beta_t for iteration t; one value shared by every candidate.

    ``domain_size`` is |X| for rules whose schedule depends on it, and
    ``grid_spec`` carries the smoothness constants of the infinite max-value
    rule.

    Returns:
        beta_t, or NaN for rules without a confidence parameter
    """
    rule = spec.rule
    if rule in ("random", "us"):
        return math.nan
    if isinstance(spec, (StraddleRule, MILERule)):
        return spec.beta_sqrt ** 2
    if isinstance(spec, LSERule):
        cardinality = spec.cardinality if spec.cardinality is not None else domain_size
        if cardinality is None:
            raise ValueError("lse_alg needs |X| (set 'cardinality' for continuous domains)")
        return beta_lse_theoretical(cardinality, t, spec.delta) ** 2
    if rule == "rand_straddle":
        return sample_beta_chi2(rng)
    if rule == "rand_straddle_max_finite":
        if domain_size is None:
            raise ValueError("rand_straddle_max_finite needs |X|")
        return beta_maxloss_finite(int(domain_size), rng)
    if isinstance(spec, RandStraddleMaxInfiniteRule):
        if grid_spec is None:
            raise ValueError("rand_straddle_max_infinite needs the lattice constants")
        return beta_maxloss_infinite(grid_spec.a, grid_spec.b, grid_spec.r, grid_spec.d, t, rng)
    raise UnsupportedRuleError(f"unknown acquisition rule '{rule}'")


def _masked(scores: np.ndarray, mask: Optional[np.ndarray]) -> np.ndarray:
    if mask is None:
        return scores
    return np.where(mask, -np.inf, scores)


def select_next(
    spec: AcquisitionSpec,
    post: Posterior,
    candidates,
    theta: float,
    rng: RngState,
    t: int = 1,
    tracker: Optional[IntersectionTracker] = None,
    mask: Optional[np.ndarray] = None,
    domain_size: Optional[float] = None,
    grid_spec: Optional[GridSpec] = None,
    persistent: bool = True,
    mile_chunk_size: int = DEFAULT_MILE_CHUNK,
) -> Selection:
    """
    Argmax of the rule's score over ``candidates``; ties go to the lowest index.

    ``mask`` flags candidates that may not be chosen (already observed when
    re-observation is disabled). ``persistent`` tells whether ``candidates``
    is the same finite set every iteration; rules that need a fixed set fail
    otherwise. ``domain_size`` defaults to the number of candidates.

    Args:
        spec: Acquisition rule and its parameters
        post: Posterior after t-1 observations
        candidates: (n, d) points to choose from
        theta: Threshold
        rng: Acquisition stream; only randomized rules draw from it
        t: Iteration, 1-based
        tracker: Running band intersection for LSE on a fixed set

    Returns:
        Selection with the chosen index, point, beta_t and score
    """
    points = as_points(candidates)
    n = points.shape[0]
    if n == 0:
        raise EmptyCandidateSetError("candidate set is empty")
    if mask is not None:
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (n,):
            raise ValueError(f"mask has shape {mask.shape}, expected ({n},)")
        if mask.all():
            raise EmptyCandidateSetError("every candidate is masked out")
    if spec.finite_only and not persistent:
        raise UnsupportedRuleError(
            f"acquisition '{spec.rule}' needs a finite candidate set and does not support continuous domains"
        )
    if domain_size is None:
        domain_size = n

    if spec.rule == "random":
        allowed = np.flatnonzero(~mask) if mask is not None else np.arange(n)
        index = int(allowed[int(rng.integers(allowed.shape[0]))])
        return Selection(index=index, point=points[index].copy(), beta=math.nan, score=math.nan)

    beta = draw_beta(spec, t, rng, domain_size=domain_size, grid_spec=grid_spec)

    if isinstance(spec, MILERule):
        scores = mile_score(post, points, theta, beta_sqrt=spec.beta_sqrt, chunk_size=mile_chunk_size)
    else:
        mean, var = posterior_mean_var(post, points)
        if spec.rule == "us":
            scores = var
        elif isinstance(spec, StraddleRule):
            scores = straddle_from_moments(mean, np.sqrt(var), theta, spec.beta_sqrt)
        elif isinstance(spec, LSERule):
            band = band_from_moments(mean, var, math.sqrt(beta))
            use_intersection = spec.use_intersection
            if use_intersection is None:
                use_intersection = persistent
            if use_intersection:
                if tracker is None or not persistent:
                    raise IntersectionUnavailableError(
                        "lse_alg intersection requested on a candidate set that changes between iterations"
                    )
                band = tracker.update(band)
            scores = lse_score(band, theta, use_intersection)
        else:
            band = band_from_moments(mean, var, math.sqrt(beta))
            scores = randomized_straddle_score(band, theta)

    scores = _masked(np.asarray(scores, dtype=float), mask)
    index = int(np.argmax(scores))
    logger.debug(f"t={t} rule={spec.rule} picked candidate {index} score={scores[index]:.6g}")
    return Selection(index=index, point=points[index].copy(), beta=float(beta), score=float(scores[index]))
