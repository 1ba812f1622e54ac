"""Experiment orchestration, aggregation, bound checks and artefact export."""

from .aggregate import SUMMARY_METRICS, aggregate, summary_columns
from .bounds import BoundCheckResult, bound_check, is_misspecified
from .experiment import (
    ConfigError,
    NumericalError,
    Problem,
    prepare_problem,
    run_experiment,
    run_seed,
)
from .export import (
    ExportError,
    emit_csv,
    emit_runs_csv,
    emit_seeds_csv,
    emit_summary_csv,
    load_runs_csv,
    load_summary_csv,
    runs_header,
)
from .plots import UnknownMetricError, emit_plot, summary_label
from .settings import LabSettings, get_settings

__all__ = [
    "BoundCheckResult",
    "ConfigError",
    "ExportError",
    "LabSettings",
    "NumericalError",
    "Problem",
    "SUMMARY_METRICS",
    "UnknownMetricError",
    "aggregate",
    "bound_check",
    "emit_csv",
    "emit_plot",
    "emit_runs_csv",
    "emit_seeds_csv",
    "emit_summary_csv",
    "get_settings",
    "is_misspecified",
    "load_runs_csv",
    "load_summary_csv",
    "prepare_problem",
    "run_experiment",
    "run_seed",
    "runs_header",
    "summary_columns",
    "summary_label",
]
