"""Reading input matrices (JSON or headerless CSV) and octonion arguments."""

import csv
import json
import logging
import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..clifford.octonion import Octonion
from ..errors import MatrixParseError

logger = logging.getLogger(__name__)

SUPPORTED_FORMATS = ("json", "csv")


def _entry(value, row: int, column: int) -> float:
    if isinstance(value, bool):
        raise MatrixParseError(f"row {row}, column {column}: {value!r} is not a number")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise MatrixParseError(f"row {row}, column {column}: {value!r} is not a number")
    if not math.isfinite(number):
        raise MatrixParseError(f"row {row}, column {column}: {value!r} is not finite")
    return number


def rows_to_matrix(rows: Sequence[Sequence]) -> np.ndarray:
    """
    Validate a list of rows and build a square float matrix.

    Row and column numbers in error messages are 1-based.

    Raises:
        MatrixParseError: On ragged rows, non-numeric entries or a non-square shape
    """
    if not rows:
        raise MatrixParseError("matrix is empty")
    width = None
    values: List[List[float]] = []
    for i, row in enumerate(rows, start=1):
        if isinstance(row, (str, bytes)) or not isinstance(row, Sequence):
            raise MatrixParseError(f"row {i}: expected a list of numbers")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixParseError(f"row {i}: has {len(row)} entries, expected {width}")
        values.append([_entry(value, i, j) for j, value in enumerate(row, start=1)])
    if len(values) != width:
        raise MatrixParseError(f"matrix is {len(values)}x{width}, expected a square matrix")
    return np.array(values, dtype=float)


def parse_json_matrix(text: str) -> np.ndarray:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")
    if not isinstance(document, dict) or "matrix" not in document:
        raise MatrixParseError('JSON input must be an object with a "matrix" key')
    rows = document["matrix"]
    if not isinstance(rows, list):
        raise MatrixParseError('"matrix" must be a list of rows')
    return rows_to_matrix(rows)


def parse_csv_matrix(text: str) -> np.ndarray:
    rows = [
        [cell.strip() for cell in row]
        for row in csv.reader(text.splitlines())
        if any(cell.strip() for cell in row)
    ]
    return rows_to_matrix(rows)


def detect_format(path: str, fmt: Optional[str] = None) -> str:
    if fmt:
        if fmt not in SUPPORTED_FORMATS:
            raise MatrixParseError(f"unsupported format '{fmt}'")
        return fmt
    suffix = Path(path).suffix.lower().lstrip(".")
    if suffix in SUPPORTED_FORMATS:
        return suffix
    raise MatrixParseError(f"cannot infer the format of '{path}'; use --format json|csv")


def read_matrix(path: str, fmt: Optional[str] = None) -> np.ndarray:
    """
    Read a square matrix from a file.

    Args:
        path: Input file
        fmt: "json" or "csv"; inferred from the extension when omitted

    Returns:
        Float matrix

    Raises:
        MatrixParseError: If the file is missing or malformed
    """
    fmt = detect_format(path, fmt)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MatrixParseError(f"cannot read '{path}': {e.strerror or e}")
    except UnicodeDecodeError as e:
        raise MatrixParseError(f"cannot read '{path}': not valid UTF-8 at byte {e.start}")
    matrix = parse_json_matrix(text) if fmt == "json" else parse_csv_matrix(text)
    logger.debug(f"Read {matrix.shape[0]}x{matrix.shape[1]} matrix from {path} ({fmt})")
    return matrix


def _octonion(text: str) -> Octonion:
    parts = [part for part in text.replace(" ", "").split(",") if part]
    if len(parts) != 8:
        raise MatrixParseError(f"an octonion needs 8 comma-separated components, got {len(parts)}")
    values = []
    for j, part in enumerate(parts, start=1):
        try:
            values.append(float(part))
        except ValueError:
            raise MatrixParseError(f"octonion component {j}: '{part}' is not a number")
    if not all(math.isfinite(v) for v in values):
        raise MatrixParseError("octonion components must be finite")
    return Octonion.from_array(values)


def parse_octonion_argument(text: str) -> Tuple[Octonion, Optional[Octonion]]:
    """
    Parse "a1w,a1x,a1y,a1z,a2w,a2x,a2y,a2z" optionally followed by "times" and a second octonion.
    """
    pieces = text.split("times")
    if len(pieces) > 2:
        raise MatrixParseError("expected at most one 'times'")
    a = _octonion(pieces[0])
    b = _octonion(pieces[1]) if len(pieces) == 2 else None
    return a, b
