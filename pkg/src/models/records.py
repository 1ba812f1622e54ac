"""Pydantic models for run outputs and theory diagnostics."""

import math
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

EvalMode = Literal["finite_exact", "infinite_mc"]
class LossReport(BaseModel):
    """
    Loss metrics of one classification against the truth.

    ``eval_mode`` says whether the metrics are exact averages over a finite
    domain or Monte Carlo estimates over ``n_test`` uniform points.
    """

    r_t: float = Field(..., ge=0, description="Mean loss over the evaluation points")
    R_t: float = Field(..., ge=0, description="Cumulative mean loss up to this iteration")
    max_loss: float = Field(..., ge=0, description="Largest pointwise loss")
    precision: float = Field(..., ge=0, le=1)
    recall: float = Field(..., ge=0, le=1)
    fscore: float = Field(..., ge=0, le=1)
    n_high: int = Field(..., ge=0, description="|H| on the evaluation points")
    eval_mode: EvalMode
    n_test: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_mode(self) -> "LossReport":
        if self.eval_mode == "infinite_mc" and self.n_test is None:
            raise ValueError("infinite_mc reports need n_test")
        return self


class RunRow(BaseModel):
    """
    One acquisition step of one seed.

    Metrics describe the classification H_t/L_t built from the posterior
    *before* the point chosen at step t is observed. NaN marks values that
    were not computed (e.g. beta for rules without a confidence parameter).
    """

    seed: int = Field(..., ge=0)
    t: int = Field(..., ge=1)
    x: List[float]
    y: float
    beta: float
    r_t: float
    R_t: float
    max_loss: float
    precision: float
    recall: float
    fscore: float
    wall_ms: float = 0.0

    @classmethod
    def from_report(
        cls,
        seed: int,
        t: int,
        x: List[float],
        y: float,
        beta: float,
        report: Optional[LossReport],
        R_t: float,
        wall_ms: float = 0.0,
    ) -> "RunRow":
        """
        Build a row from the iteration's loss report.

        Args:
            seed: Seed index
            t: Iteration (1-based)
            x: Selected point
            y: Observed value at x
            beta: Confidence parameter drawn at t (NaN when the rule has none)
            report: Metrics of H_t/L_t, or None on iterations skipped by the cadence
            R_t: Cumulative loss over evaluated iterations so far
            wall_ms: Wall-clock time of the iteration

        Returns:
            RunRow with NaN metrics when ``report`` is None
        """
        if report is None:
            metrics = dict.fromkeys(("r_t", "max_loss", "precision", "recall", "fscore"), math.nan)
        else:
            metrics = report.model_dump(include={"r_t", "max_loss", "precision", "recall", "fscore"})
        return cls(seed=seed, t=t, x=x, y=y, beta=beta, R_t=R_t, wall_ms=wall_ms, **metrics)


class RunRecord(BaseModel):
    """All rows of one seed plus its terminal estimate."""

    seed: int = Field(..., ge=0)
    acquisition: str
    dim: int = Field(..., ge=1)
    rows: List[RunRow] = Field(default_factory=list)
    eval_mode: Optional[EvalMode] = None
    n_test: Optional[int] = Field(default=None, ge=1, description="Size of the Monte Carlo test set")
    t_check: Optional[int] = Field(
        default=None,
        description="Iteration whose classification is returned (max-value variants)"
    )
    terminal: Optional[LossReport] = Field(
        default=None,
        description="Loss of the returned classification: H_t_check on the check set for "
                    "max-value variants, the final H_T on the evaluation points otherwise"
    )
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None

    @property
    def n_high_terminal(self) -> Optional[int]:
        return self.terminal.n_high if self.terminal is not None else None

    def is_complete(self, iterations: int) -> bool:
        return not self.failed and len(self.rows) == iterations


class TheoryReport(BaseModel):
    """Constants and bound right-hand sides at horizon t."""

    t: int = Field(..., ge=1)
    gamma_t_greedy: float = Field(..., ge=0)
    C1: float = Field(..., ge=0)
    C1_tilde: Optional[float] = Field(default=None, ge=0)
    C1_check: float = Field(..., ge=0)
    s_t: Optional[float] = Field(default=None, ge=0)
    bound_avg: float = Field(..., ge=0)
    bound_rate: float = Field(..., ge=0)
    bound_max_finite: Optional[float] = Field(default=None, ge=0)
    bound_max_infinite: Optional[float] = Field(default=None, ge=0)
    misspecified: bool = False
