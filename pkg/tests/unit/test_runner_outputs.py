"""Unit tests for settings, summaries, CSV artefacts and plots."""

import math

import numpy as np
import pandas as pd
import pytest

from src.models.records import LossReport, RunRecord, RunRow
from src.runner import (
    ExportError,
    LabSettings,
    UnknownMetricError,
    aggregate,
    emit_csv,
    emit_plot,
    emit_seeds_csv,
    load_runs_csv,
    load_summary_csv,
    summary_columns,
    summary_label,
)


def _record(seed, r_values, error=None, dim=2):
    rows = [
        RunRow(seed=seed, t=t, x=[0.1 * t, 1.0 / 3.0][:dim], y=0.5, beta=math.nan, r_t=r,
               R_t=sum(r_values[:t]), max_loss=2 * r, precision=1.0, recall=0.5, fscore=2 / 3)
        for t, r in enumerate(r_values, start=1)
    ]
    return RunRecord(seed=seed, acquisition="rand_straddle", dim=dim, rows=rows, error=error)


class TestLabSettings:
    """Tests for LabSettings."""

    def test_defaults(self, monkeypatch):
        """Test default values without environment overrides."""
        monkeypatch.delenv("LSE_CANDIDATE_POOL_SIZE", raising=False)
        settings = LabSettings()
        assert settings.candidate_pool_size == 4096
        assert settings.test_set_size == 100_000
        assert settings.max_workers == 1

    def test_environment_override(self, monkeypatch):
        """Test that LSE_-prefixed variables override defaults."""
        monkeypatch.setenv("LSE_CANDIDATE_POOL_SIZE", "10")
        monkeypatch.setenv("LSE_SHOW_PROGRESS", "false")
        settings = LabSettings()
        assert settings.candidate_pool_size == 10
        assert settings.show_progress is False


class TestAggregate:
    """Tests for per-iteration summaries."""

    def test_mean_and_standard_error(self):
        """Test mean, SE and 6 x SE across two seeds."""
        summary = aggregate([_record(0, [1.0, 0.5]), _record(1, [3.0, 0.5])])
        assert list(summary.columns) == summary_columns()
        assert summary["t"].tolist() == [1, 2]
        assert summary["r_t_mean"].tolist() == [2.0, 0.5]
        se = np.std([1.0, 3.0], ddof=1) / np.sqrt(2)
        assert summary.loc[0, "r_t_se"] == pytest.approx(se)
        assert summary.loc[0, "r_t_err6"] == pytest.approx(6 * se)
        assert summary.loc[1, "r_t_se"] == 0.0

    def test_single_seed_has_zero_se(self):
        """Test that one seed gives SE = 0."""
        summary = aggregate([_record(0, [1.0, 2.0])])
        assert summary["fscore_se"].tolist() == [0.0, 0.0]

    def test_failed_seeds_left_out(self):
        """Test that a failed seed does not enter the summary."""
        summary = aggregate([_record(0, [1.0]), _record(1, [5.0], error="NumericalError: y")])
        assert summary["r_t_mean"].tolist() == [1.0]

    def test_seed_order_irrelevant(self):
        """Test that reordering the records gives identical numbers."""
        records = [_record(i, [0.1 * i + 0.3, 0.7 / (i + 1)]) for i in range(5)]
        pd.testing.assert_frame_equal(aggregate(records), aggregate(records[::-1]))

    def test_no_complete_seed(self):
        """Test that an all-failed run gives an empty table with the summary columns."""
        summary = aggregate([_record(0, [1.0], error="x")])
        assert summary.empty
        assert list(summary.columns) == summary_columns()


class TestExport:
    """Tests for CSV artefacts."""

    def test_runs_csv_round_trip(self, tmp_path):
        """Test that written floats read back exactly."""
        records = [_record(1, [0.1, 0.2]), _record(0, [1.0 / 3.0, 2.0 / 7.0])]
        path = emit_csv(records, tmp_path / "runs.csv")
        frame = load_runs_csv(path)
        assert list(frame.columns[:4]) == ["seed", "t", "x1", "x2"]
        assert frame["seed"].tolist() == [0, 0, 1, 1]
        assert frame.loc[0, "r_t"] == 1.0 / 3.0
        assert frame.loc[1, "x2"] == 1.0 / 3.0
        assert frame["beta"].isna().all()

    def test_runs_csv_line_endings(self, tmp_path):
        """Test LF line endings and a header-only file for no rows."""
        path = emit_csv([], tmp_path / "empty.csv", dim=3)
        assert path.read_bytes() == b"seed,t,x1,x2,x3,y,beta,r_t,R_t,max_loss,precision,recall,fscore,wall_ms\n"

    def test_summary_round_trip(self, tmp_path):
        """Test that a summary reads back unchanged."""
        summary = aggregate([_record(0, [1.0 / 3.0, 0.5]), _record(1, [0.25, 0.125])])
        loaded = load_summary_csv(emit_csv(summary, tmp_path / "summary.csv"))
        pd.testing.assert_frame_equal(loaded, summary, check_dtype=False)

    def test_seeds_csv(self, tmp_path):
        """Test the per-seed terminal file."""
        record = _record(0, [1.0])
        record.t_check = 1
        record.terminal = LossReport(
            r_t=0.25, R_t=1.25, max_loss=2.0, precision=1.0, recall=0.5, fscore=2 / 3,
            n_high=12, eval_mode="finite_exact",
        )
        path = emit_seeds_csv([record, _record(1, [], error="ConditioningError: bad")], tmp_path / "seeds.csv")
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "seed,acquisition,rows,t_check,n_high_terminal,terminal_r,terminal_max_loss,error"
        assert lines[1] == "0,rand_straddle,1,1,12,0.25,2.0,"
        assert lines[2] == "1,rand_straddle,0,,,,,ConditioningError: bad"

    def test_unwritable_path(self, tmp_path):
        """Test that write failures become ExportError."""
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(ExportError):
            emit_csv([_record(0, [1.0])], blocker / "runs.csv")

    def test_missing_file(self, tmp_path):
        """Test that reading a missing file raises ExportError."""
        with pytest.raises(ExportError):
            load_summary_csv(tmp_path / "missing.csv")


class TestPlots:
    """Tests for SVG plots."""

    @pytest.fixture
    def summary(self):
        return aggregate([_record(0, [1.0, 0.5, 0.2]), _record(1, [0.8, 0.4, 0.1])])

    def test_writes_svg(self, tmp_path, summary):
        """Test that an SVG file is produced."""
        path = emit_plot({"rand_straddle": summary}, tmp_path / "r_t.svg")
        text = path.read_text(encoding="utf-8")
        assert "<svg" in text

    def test_deterministic_bytes(self, tmp_path, summary):
        """Test that identical input gives identical files."""
        a = emit_plot({"a": summary, "b": summary}, tmp_path / "a.svg", metric="fscore", title="F")
        b = emit_plot({"a": summary, "b": summary}, tmp_path / "b.svg", metric="fscore", title="F")
        assert a.read_bytes() == b.read_bytes()

    def test_unknown_metric(self, tmp_path, summary):
        """Test that unknown metrics list the available ones."""
        with pytest.raises(UnknownMetricError, match="available"):
            emit_plot({"a": summary}, tmp_path / "x.svg", metric="precision")

    def test_empty_input(self, tmp_path):
        """Test that an empty mapping is rejected."""
        with pytest.raises(ValueError):
            emit_plot({}, tmp_path / "x.svg")

    def test_labels(self):
        """Test series labels derived from file paths."""
        assert summary_label("results/mile/summary.csv") == "mile"
        assert summary_label("results/straddle.csv") == "straddle"
