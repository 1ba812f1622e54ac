"""Pydantic models describing one level-set estimation experiment."""

from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .acquisition import AcquisitionSpec, LSERule
from .kernel import KernelSpec

AnalyticName = Literal["sinusoidal", "himmelblau", "sphere", "rosenbrock", "styblinski_tang"]
ANALYTIC_DIMS = {"sinusoidal": 2, "himmelblau": 2, "sphere": 5, "rosenbrock": 5, "styblinski_tang": 5}


class AnalyticBlackBoxSpec(BaseModel):
    """Closed-form synthetic test function."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["analytic"] = "analytic"
    name: AnalyticName


class GPSampleBlackBoxSpec(BaseModel):
    """
    One sample path of a zero-mean GP, redrawn for every seed.

    When ``kernel`` is unset the model kernel of the experiment is used, which
    is the exact-Bayes setting.
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["gp_sample"] = "gp_sample"
    kernel: Optional[KernelSpec] = None


class TabulatedBlackBoxSpec(BaseModel):
    """
    Values known only on a finite point set (lifetime maps).

    Exactly one of ``path`` (an ingestion-format CSV) or ``standin_seed``
    (the synthetic stand-in generator) must be given.
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["tabulated"] = "tabulated"
    path: Optional[str] = None
    standin_seed: Optional[int] = Field(default=None, ge=0)
    strict: bool = False

    @model_validator(mode="after")
    def one_source(self) -> "TabulatedBlackBoxSpec":
        if (self.path is None) == (self.standin_seed is None):
            raise ValueError("tabulated black box needs exactly one of 'path' or 'standin_seed'")
        return self


BlackBoxSpec = Annotated[
    Union[AnalyticBlackBoxSpec, GPSampleBlackBoxSpec, TabulatedBlackBoxSpec],
    Field(discriminator="kind"),
]


def _check_bounds(bounds: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
    for axis, (low, high) in enumerate(bounds):
        if not low < high:
            raise ValueError(f"axis {axis}: lower bound {low} must be below upper bound {high}")
    return bounds


class GridDomainSpec(BaseModel):
    """Finite 2-D lattice including its endpoints."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["grid"] = "grid"
    bounds: List[Tuple[float, float]] = Field(..., min_length=2, max_length=2)
    points_per_axis: Tuple[int, int] = (50, 50)

    @field_validator("bounds")
    @classmethod
    def ordered_bounds(cls, v: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
        return _check_bounds(v)

    @field_validator("points_per_axis")
    @classmethod
    def at_least_two(cls, v: Tuple[int, int]) -> Tuple[int, int]:
        if min(v) < 2:
            raise ValueError("points_per_axis entries must be >= 2")
        return v


class TabulatedDomainSpec(BaseModel):
    """Finite domain equal to the tabulated black box's own points."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["tabulated"] = "tabulated"


class BoxDomainSpec(BaseModel):
    """Continuous axis-aligned box; losses are estimated on a random test set."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["box"] = "box"
    bounds: List[Tuple[float, float]] = Field(..., min_length=1)

    @field_validator("bounds")
    @classmethod
    def ordered_bounds(cls, v: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
        return _check_bounds(v)


DomainSpec = Annotated[
    Union[GridDomainSpec, TabulatedDomainSpec, BoxDomainSpec],
    Field(discriminator="kind"),
]


class EvalSpec(BaseModel):
    """Evaluation knobs; unset values fall back to LabSettings."""

    model_config = ConfigDict(extra="forbid")

    test_set_size: Optional[int] = Field(default=None, ge=1)
    cadence: int = Field(default=1, ge=1, description="Evaluate metrics every k iterations")
    candidate_pool_size: Optional[int] = Field(default=None, ge=1)
    t_check_samples: Optional[int] = Field(default=None, ge=1)
    t_check_points: Optional[int] = Field(default=None, ge=1)
    record_wall_time: bool = False


class ExperimentConfig(BaseModel):
    """
    Complete description of an experiment: black box, domain, GP model,
    acquisition rule and repetition counts.

    Serializes to and from JSON without loss.
    """

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    blackbox: BlackBoxSpec
    domain: DomainSpec
    kernel: KernelSpec
    noise_variance: float = Field(..., ge=0)
    theta: float
    acquisition: AcquisitionSpec
    iterations: int = Field(..., ge=1)
    n_seeds: int = Field(default=1, ge=1)
    master_seed: int = Field(default=0, ge=0)
    eval: EvalSpec = Field(default_factory=EvalSpec)
    algorithm_variant: Literal["avg_loss", "max_finite", "max_infinite"] = "avg_loss"
    initial_points: int = Field(default=1, ge=1)
    reobserve: bool = Field(
        default=True,
        description="Allow querying a point more than once (off for noiseless data)"
    )

    @property
    def is_finite(self) -> bool:
        return self.domain.kind != "box"

    @property
    def dim(self) -> Optional[int]:
        """Input dimension when it is known without loading data."""
        if self.domain.kind == "box":
            return len(self.domain.bounds)
        return 2

    @model_validator(mode="after")
    def compatible(self) -> "ExperimentConfig":
        acq = self.acquisition
        finite = self.is_finite
        if acq.finite_only and not finite:
            raise ValueError(f"acquisition '{acq.rule}' does not support continuous domains")
        if isinstance(acq, LSERule) and acq.use_intersection and not finite:
            raise ValueError("lse_alg intersection needs a persistent finite candidate set")
        if acq.rule == "rand_straddle_max_infinite" and finite:
            raise ValueError("rand_straddle_max_infinite needs a box domain")
        if self.algorithm_variant == "max_infinite" and finite:
            raise ValueError("algorithm_variant 'max_infinite' needs a box domain")
        if self.algorithm_variant == "max_infinite" and acq.rule != "rand_straddle_max_infinite":
            raise ValueError(
                "algorithm_variant 'max_infinite' needs the rand_straddle_max_infinite rule, "
                "which carries the lattice constants a and b"
            )
        if self.algorithm_variant == "max_finite" and not finite:
            raise ValueError("algorithm_variant 'max_finite' needs a finite domain")
        if self.domain.kind == "tabulated" and self.blackbox.kind != "tabulated":
            raise ValueError("a tabulated domain needs a tabulated black box")
        if self.blackbox.kind == "tabulated" and self.domain.kind != "tabulated":
            raise ValueError("a tabulated black box is only defined on its own points")
        if self.blackbox.kind == "gp_sample" and not finite:
            raise ValueError("gp_sample black boxes are tabulated on a finite grid")
        if not self.reobserve and not finite:
            raise ValueError("reobserve=false needs a finite domain")
        if self.blackbox.kind == "analytic" and ANALYTIC_DIMS[self.blackbox.name] != self.dim:
            raise ValueError(
                f"'{self.blackbox.name}' is defined for d = {ANALYTIC_DIMS[self.blackbox.name]}, "
                f"the domain has d = {self.dim}"
            )
        return self

    @classmethod
    def from_json_file(cls, path) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as f:
            return cls.model_validate_json(f.read())

    def to_json_file(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.model_dump_json(indent=2))
            f.write("\n")
