"""Parser for lifetime-map CSV files (header x1,x2,lifetime)."""

import codecs
import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union

import numpy as np

from ..benchlab import LIFETIME_HEADER, LIFETIME_SHAPE, TabulatedBlackBox, lifetime_axes

logger = logging.getLogger(__name__)

# f = -lifetime + LIFETIME_OFFSET, thresholded at 0
LIFETIME_OFFSET = 3.0
RECOMMENDED_THETA = 0.0


class LifetimeFormatError(ValueError):
    """Raised for malformed rows, duplicate coordinates or a wrong lattice layout."""
    pass


@dataclass(frozen=True)
class IngestedDataset:
    """
    Coordinates, raw lifetimes and the transformed target f = -lifetime + 3.
    Row order follows the file.
    """

    coordinates: np.ndarray
    raw_values: np.ndarray
    transformed: np.ndarray
    source: str = ""

    def __len__(self) -> int:
        return self.coordinates.shape[0]

    def to_blackbox(self) -> TabulatedBlackBox:
        return TabulatedBlackBox(self.coordinates, self.transformed)


class LifetimeCSVParser:
    """
    Parser for lifetime maps.

    Reads a UTF-8 CSV with header ``x1,x2,lifetime`` (LF or CRLF line
    endings), rejects malformed rows and duplicate coordinates, and in strict
    mode checks the full 89 x 74 lattice with coordinates 2a + 6.
    """

    def __init__(self, path: Union[str, Path], strict: bool = False):
        """
        Initialize parser for one lifetime CSV.

        Args:
            path: CSV file with header x1,x2,lifetime
            strict: Require the full 89 x 74 lattice with coordinates 2a + 6
        """
        self.path = Path(path)
        self.strict = strict
        self._validate_file()

    def _validate_file(self) -> None:
        """Ensure the CSV exists."""
        if not self.path.exists():
            raise FileNotFoundError(f"Lifetime CSV not found: {self.path}")

    def _read_csv(self) -> List[Tuple[int, Dict[str, str]]]:
        """
        Read the CSV and check its header.

        Returns:
            Rows paired with their line number in the file (header is line 1)
        """
        raw = self.path.read_bytes()
        bom = len(codecs.BOM_UTF8) if raw.startswith(codecs.BOM_UTF8) else 0
        try:
            text = raw[bom:].decode("utf-8")
        except UnicodeDecodeError as e:
            offset = bom + e.start
            row = raw[:offset].count(b"\n") + 1
            raise LifetimeFormatError(
                f"{self.path}: not valid UTF-8 (byte 0x{raw[offset]:02x} at offset {offset}, row {row})"
            ) from None

        reader = csv.DictReader(io.StringIO(text, newline=""))
        header = tuple(name.strip() for name in (reader.fieldnames or ()))
        if header != LIFETIME_HEADER:
            raise LifetimeFormatError(
                f"{self.path}: expected header {','.join(LIFETIME_HEADER)}, got {','.join(header) or '<empty>'}"
            )
        return [(reader.line_num, row) for row in reader]

    @staticmethod
    def _parse_row(line: int, row: Dict[str, str]) -> Tuple[float, float, float]:
        if None in row or any(row.get(k) is None for k in LIFETIME_HEADER):
            raise LifetimeFormatError(f"row {line}: expected 3 fields")
        try:
            x1, x2, value = (float(row[k].strip()) for k in LIFETIME_HEADER)
        except ValueError:
            raise LifetimeFormatError(
                f"row {line}: non-numeric value in {[row[k] for k in LIFETIME_HEADER]}"
            ) from None
        if not all(np.isfinite(v) for v in (x1, x2, value)):
            raise LifetimeFormatError(f"row {line}: non-finite value")
        return x1, x2, value

    def _check_layout(self, coords: np.ndarray, lines: List[int]) -> None:
        expected = LIFETIME_SHAPE[0] * LIFETIME_SHAPE[1]
        if coords.shape[0] != expected:
            raise LifetimeFormatError(
                f"{self.path}: strict layout expects {LIFETIME_SHAPE[0]} x {LIFETIME_SHAPE[1]} = "
                f"{expected} points, got {coords.shape[0]}"
            )
        ax1, ax2 = lifetime_axes(LIFETIME_SHAPE)
        off1 = ~np.isin(coords[:, 0], ax1)
        off2 = ~np.isin(coords[:, 1], ax2)
        bad = np.flatnonzero(off1 | off2)
        if bad.size:
            listed = ", ".join(str(lines[i]) for i in bad[:10])
            raise LifetimeFormatError(
                f"{self.path}: coordinates off the 2a+6 lattice on rows {listed}"
                + (" ..." if bad.size > 10 else "")
            )

    def parse(self) -> IngestedDataset:
        """
        Read, validate and transform the whole file.

        Returns:
            IngestedDataset with raw lifetimes and f = -lifetime + 150
        """
        rows = self._read_csv()
        if not rows:
            raise LifetimeFormatError(f"{self.path}: no data rows")

        coords = []
        values = []
        lines = []
        seen: Dict[Tuple[float, float], int] = {}
        for line, row in rows:
            x1, x2, value = self._parse_row(line, row)
            key = (x1, x2)
            if key in seen:
                raise LifetimeFormatError(
                    f"rows {seen[key]} and {line}: duplicate coordinates ({x1:g}, {x2:g})"
                )
            seen[key] = line
            coords.append(key)
            lines.append(line)
            values.append(value)

        coordinates = np.array(coords, dtype=float)
        raw = np.array(values, dtype=float)
        if self.strict:
            self._check_layout(coordinates, lines)

        logger.info(f"Parsed {raw.shape[0]:,} lifetime values from {self.path}")
        return IngestedDataset(
            coordinates=coordinates,
            raw_values=raw,
            transformed=-raw + LIFETIME_OFFSET,
            source=str(self.path),
        )

    def get_stats(self) -> Dict[str, float]:
        """Point count, lifetime range and the number of points at or above the recommended threshold."""
        data = self.parse()
        return {
            "points": len(data),
            "lifetime_min": float(data.raw_values.min()),
            "lifetime_max": float(data.raw_values.max()),
            "points_above_threshold": int(np.sum(data.transformed >= RECOMMENDED_THETA)),
        }


def ingest_lifetime_csv(path: Union[str, Path], strict: bool = False) -> IngestedDataset:
    """
    Parse a lifetime CSV.

    Args:
        path: CSV with an x1,x2,lifetime header
        strict: Also require the 2a+6 lattice and the full 25x25 layout

    Returns:
        The parsed dataset
    """
    return LifetimeCSVParser(path, strict=strict).parse()
