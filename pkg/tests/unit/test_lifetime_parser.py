"""Unit tests for the lifetime-map CSV parser."""

import numpy as np
import pytest

from src.benchlab import generate_lifetime_standin, write_lifetime_csv
from src.ingestion import (
    LIFETIME_OFFSET,
    LifetimeCSVParser,
    LifetimeFormatError,
    ingest_lifetime_csv,
)


class TestLifetimeCSVParser:
    """Tests for LifetimeCSVParser."""

    def test_parser_initialization(self, fixtures_dir):
        """Test parser initialization with a valid file."""
        parser = LifetimeCSVParser(fixtures_dir / "lifetime_small.csv")
        assert parser.path.exists()
        assert not parser.strict

    def test_parser_file_not_found(self, tmp_path):
        """Test parser raises error for a missing file."""
        with pytest.raises(FileNotFoundError):
            LifetimeCSVParser(tmp_path / "missing.csv")

    def test_parse_small_file(self, fixtures_dir):
        """Test coordinates, raw values and the transformed target."""
        data = ingest_lifetime_csv(fixtures_dir / "lifetime_small.csv")
        assert len(data) == 3
        np.testing.assert_array_equal(data.coordinates, [[8, 8], [8, 10], [10, 8]])
        np.testing.assert_allclose(data.raw_values, [3.0, 7.4613, 0.091587])
        np.testing.assert_allclose(data.transformed, LIFETIME_OFFSET - data.raw_values)
        assert data.transformed[0] == 0.0

    def test_crlf_line_endings(self, fixtures_dir):
        """Test that CRLF files parse like LF files."""
        data = ingest_lifetime_csv(fixtures_dir / "lifetime_crlf.csv")
        np.testing.assert_allclose(data.raw_values, [1.5, 2.5])

    def test_malformed_row_reports_line(self, fixtures_dir):
        """Test that a non-numeric field names its row."""
        with pytest.raises(LifetimeFormatError, match="row 3"):
            ingest_lifetime_csv(fixtures_dir / "lifetime_bad_row.csv")

    def test_duplicate_reports_both_rows(self, fixtures_dir):
        """Test that duplicate coordinates name both rows."""
        with pytest.raises(LifetimeFormatError, match="rows 2 and 4"):
            ingest_lifetime_csv(fixtures_dir / "lifetime_duplicate.csv")

    def test_invalid_utf8_reports_offset(self, fixtures_dir):
        """Test that undecodable bytes raise a format error naming the offset and row."""
        with pytest.raises(LifetimeFormatError, match=r"offset 28, row 3"):
            ingest_lifetime_csv(fixtures_dir / "lifetime_bad_encoding.csv")

    def test_bom_is_skipped(self, tmp_path):
        """Test that a UTF-8 byte order mark does not break the header."""
        path = tmp_path / "bom.csv"
        path.write_bytes(b"\xef\xbb\xbfx1,x2,lifetime\n8,8,1.0\n")
        data = ingest_lifetime_csv(path)
        np.testing.assert_allclose(data.raw_values, [1.0])

    def test_wrong_header(self, tmp_path):
        """Test that the header must be x1,x2,lifetime."""
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n8,8,1.0\n", encoding="utf-8")
        with pytest.raises(LifetimeFormatError, match="header"):
            ingest_lifetime_csv(path)

    def test_no_rows(self, tmp_path):
        """Test that a header-only file is rejected."""
        path = tmp_path / "empty.csv"
        path.write_text("x1,x2,lifetime\n", encoding="utf-8")
        with pytest.raises(LifetimeFormatError, match="no data rows"):
            ingest_lifetime_csv(path)

    def test_non_finite_value(self, tmp_path):
        """Test that inf and nan are rejected."""
        path = tmp_path / "nan.csv"
        path.write_text("x1,x2,lifetime\n8,8,nan\n", encoding="utf-8")
        with pytest.raises(LifetimeFormatError, match="non-finite"):
            ingest_lifetime_csv(path)

    def test_strict_rejects_partial_lattice(self, fixtures_dir):
        """Test that strict mode needs all 89 x 74 points."""
        with pytest.raises(LifetimeFormatError, match="6586"):
            ingest_lifetime_csv(fixtures_dir / "lifetime_small.csv", strict=True)

    def test_strict_accepts_standin(self, tmp_path):
        """Test that the stand-in map passes strict validation."""
        points, lifetimes = generate_lifetime_standin(0)
        path = write_lifetime_csv(tmp_path / "standin.csv", points, lifetimes)
        data = ingest_lifetime_csv(path, strict=True)
        assert len(data) == 6586
        np.testing.assert_array_equal(data.raw_values, lifetimes)

    def test_strict_reports_off_lattice_rows(self, tmp_path):
        """Test that off-lattice coordinates are listed by row."""
        points, lifetimes = generate_lifetime_standin(0)
        points = points.copy()
        points[0] = [9.0, 8.0]
        path = write_lifetime_csv(tmp_path / "shifted.csv", points, lifetimes)
        with pytest.raises(LifetimeFormatError, match="rows 2"):
            ingest_lifetime_csv(path, strict=True)

    def test_get_stats(self, fixtures_dir):
        """Test summary statistics."""
        stats = LifetimeCSVParser(fixtures_dir / "lifetime_small.csv").get_stats()
        assert stats["points"] == 3
        assert stats["lifetime_max"] == pytest.approx(7.4613)
        assert stats["points_above_threshold"] == 2

    def test_to_blackbox(self, fixtures_dir):
        """Test that the ingested data becomes a tabulated black box."""
        box = ingest_lifetime_csv(fixtures_dir / "lifetime_small.csv").to_blackbox()
        assert box([10.0, 8.0]) == pytest.approx(3.0 - 0.091587)
