"""Pydantic model for covariance functions."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class KernelSpec(BaseModel):
    """
    Stationary covariance function with fixed hyperparameters.

    Two variants are supported:

    - ``gaussian``: amplitude * exp(-||x - x'||^2 / lengthscale). The divisor is
      the lengthscale itself, not 2 * lengthscale^2.
    - ``matern32``: amplitude * (1 + sqrt(3) d / l) * exp(-sqrt(3) d / l).
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"variant": "gaussian", "amplitude": 1.0, "lengthscale": 2.0}
        },
    )

    variant: Literal["gaussian", "matern32"] = Field(
        default="gaussian",
        description="Kernel family"
    )
    amplitude: float = Field(
        ...,
        description="Prior variance k(x, x) in units of f^2",
        gt=0
    )
    lengthscale: float = Field(
        ...,
        description="L for gaussian, l for matern32 (input-space units)",
        gt=0
    )
