"""Ingestion of measured lifetime maps."""

from .lifetime_parser import (
    LIFETIME_OFFSET,
    RECOMMENDED_THETA,
    IngestedDataset,
    LifetimeCSVParser,
    LifetimeFormatError,
    ingest_lifetime_csv,
)

__all__ = [
    "IngestedDataset",
    "LIFETIME_OFFSET",
    "LifetimeCSVParser",
    "LifetimeFormatError",
    "RECOMMENDED_THETA",
    "ingest_lifetime_csv",
]
