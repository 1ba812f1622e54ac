"""Acquisition rules, confidence-parameter schedules and next-point selection."""

from .beta import (
    beta_lse_theoretical,
    beta_maxloss_finite,
    beta_maxloss_infinite,
    chi2_from_uniform,
    maxloss_infinite_shift,
    sample_beta_chi2,
)
from .scores import (
    ConfidenceBand,
    IntersectionTracker,
    IntersectionUnavailableError,
    band_from_moments,
    confidence_band,
    lse_score,
    mile_score,
    randomized_straddle_score,
    straddle_score,
)
from .selector import (
    EmptyCandidateSetError,
    Selection,
    UnsupportedRuleError,
    draw_beta,
    select_next,
)

__all__ = [
    "ConfidenceBand",
    "EmptyCandidateSetError",
    "IntersectionTracker",
    "IntersectionUnavailableError",
    "Selection",
    "UnsupportedRuleError",
    "band_from_moments",
    "beta_lse_theoretical",
    "beta_maxloss_finite",
    "beta_maxloss_infinite",
    "chi2_from_uniform",
    "confidence_band",
    "draw_beta",
    "lse_score",
    "maxloss_infinite_shift",
    "mile_score",
    "randomized_straddle_score",
    "sample_beta_chi2",
    "select_next",
    "straddle_score",
]
