"""
Runtime settings for experiment runs.

Values come from the environment (prefix ``LSE_``) or a ``.env`` file;
per-experiment values in a config's ``eval`` block take precedence.
"""

import logging
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LabSettings(BaseSettings):
    """Defaults for the experiment runner."""

    model_config = SettingsConfigDict(env_prefix="LSE_", case_sensitive=False, extra="ignore")

    # Continuous domains
    candidate_pool_size: int = Field(
        default=4096,
        ge=1,
        description="Uniform candidates scored per iteration on a box domain"
    )
    test_set_size: int = Field(
        default=100_000,
        ge=1,
        description="Random test points used to estimate losses on a box domain"
    )

    # Terminal estimate for max-value variants
    t_check_samples: int = Field(
        default=200,
        ge=1,
        description="Posterior sample paths used to pick the returned iteration"
    )
    t_check_points: int = Field(
        default=1024,
        ge=1,
        description="Check-set size on a box domain"
    )

    # Performance
    mile_chunk_size: int = Field(
        default=512,
        ge=1,
        description="Candidates scored per block by MILE"
    )
    max_workers: int = Field(
        default=1,
        ge=1,
        description="Seeds run concurrently"
    )
    incremental_updates: bool = Field(
        default=False,
        description="Append to the Cholesky factor instead of refitting every iteration"
    )

    # Output
    show_progress: bool = Field(default=True, description="Show tqdm progress bars")
    log_level: str = Field(default="INFO", description="Root logging level")


@lru_cache(maxsize=1)
def get_settings() -> LabSettings:
    """Settings from the environment, after loading a local .env file if present."""
    load_dotenv()
    settings = LabSettings()
    logging.getLogger(__name__).debug(f"Loaded settings: {settings.model_dump()}")
    return settings
