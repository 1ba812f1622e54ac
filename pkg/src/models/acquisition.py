"""Pydantic models for acquisition rules and their confidence-parameter policies."""

import math
from typing import Annotated, ClassVar, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class _RuleBase(BaseModel):
    """Shared behaviour of every acquisition rule."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    # Rules that need a finite, persistent candidate set.
    finite_only: ClassVar[bool] = False

    @property
    def label(self) -> str:
        """Short name used for plot legends and file names."""
        return self.rule  # type: ignore[attr-defined]


class RandomRule(_RuleBase):
    """Uniform random sampling."""

    rule: Literal["random"] = "random"


class UncertaintyRule(_RuleBase):
    """Uncertainty sampling: argmax of the posterior variance."""

    rule: Literal["us"] = "us"


class StraddleRule(_RuleBase):
    """Straddle heuristic with a fixed confidence parameter."""

    rule: Literal["straddle"] = "straddle"
    beta_sqrt: float = Field(default=3.0, ge=0, description="Fixed beta^(1/2)")


class LSERule(_RuleBase):
    """
    LSE algorithm baseline with the theoretical beta schedule.

    ``cardinality`` is the |X| plugged into the schedule; when unset the
    number of candidates is used (the continuous-domain experiments use 1e15).
    ``use_intersection`` defaults to on for finite domains and off otherwise.
    """

    rule: Literal["lse_alg"] = "lse_alg"
    delta: float = Field(default=0.05, gt=0, lt=1)
    use_intersection: Optional[bool] = Field(
        default=None,
        description="Running intersection of confidence bounds (None = by domain)"
    )
    cardinality: Optional[float] = Field(
        default=None,
        gt=0,
        description="|X| used inside the beta schedule"
    )


class MILERule(_RuleBase):
    """
    Maximum improvement for level-set estimation.

    The robust variant's tuning constants are pinned to epsilon = 0 and
    gamma = -inf. ``beta_sqrt`` shifts the one-step-ahead criterion by
    beta^(1/2) sigma_next; 0 gives the plain expected super-level count.
    """

    rule: Literal["mile"] = "mile"
    beta_sqrt: float = Field(default=0.0, ge=0)

    finite_only: ClassVar[bool] = True
    EPSILON: ClassVar[float] = 0.0
    GAMMA: ClassVar[float] = -math.inf


class RandStraddleRule(_RuleBase):
    """Randomized straddle: beta_t ~ chi-squared with two degrees of freedom."""

    rule: Literal["rand_straddle"] = "rand_straddle"


class RandStraddleMaxFiniteRule(_RuleBase):
    """Randomized straddle for the max-value loss on a finite domain."""

    rule: Literal["rand_straddle_max_finite"] = "rand_straddle_max_finite"
    finite_only: ClassVar[bool] = True


class RandStraddleMaxInfiniteRule(_RuleBase):
    """
    Randomized straddle for the max-value loss on a box domain.

    ``a`` and ``b`` are the derivative tail constants of the smoothness
    assumption; ``r`` is the side of the enclosing cube [0, r]^d (derived from
    the domain box when unset).
    """

    rule: Literal["rand_straddle_max_infinite"] = "rand_straddle_max_infinite"
    a: float = Field(..., gt=0)
    b: float = Field(..., gt=0)
    r: Optional[float] = Field(default=None, gt=0)


AcquisitionSpec = Annotated[
    Union[
        RandomRule,
        UncertaintyRule,
        StraddleRule,
        LSERule,
        MILERule,
        RandStraddleRule,
        RandStraddleMaxFiniteRule,
        RandStraddleMaxInfiniteRule,
    ],
    Field(discriminator="rule"),
]
