"""Pydantic data models for level-set estimation experiments."""

from .acquisition import (
    AcquisitionSpec,
    LSERule,
    MILERule,
    RandomRule,
    RandStraddleMaxFiniteRule,
    RandStraddleMaxInfiniteRule,
    RandStraddleRule,
    StraddleRule,
    UncertaintyRule,
)
from .experiment import (
    AnalyticBlackBoxSpec,
    BoxDomainSpec,
    EvalSpec,
    ExperimentConfig,
    GPSampleBlackBoxSpec,
    GridDomainSpec,
    TabulatedBlackBoxSpec,
    TabulatedDomainSpec,
)
from .kernel import KernelSpec
from .records import LossReport, RunRecord, RunRow, TheoryReport

__all__ = [
    "AcquisitionSpec",
    "AnalyticBlackBoxSpec",
    "BoxDomainSpec",
    "EvalSpec",
    "ExperimentConfig",
    "GPSampleBlackBoxSpec",
    "GridDomainSpec",
    "KernelSpec",
    "LSERule",
    "LossReport",
    "MILERule",
    "RandomRule",
    "RandStraddleMaxFiniteRule",
    "RandStraddleMaxInfiniteRule",
    "RandStraddleRule",
    "RunRecord",
    "RunRow",
    "StraddleRule",
    "TabulatedBlackBoxSpec",
    "TabulatedDomainSpec",
    "TheoryReport",
    "UncertaintyRule",
]
