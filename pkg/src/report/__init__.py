from .models import (
    AnalysisReport,
    ClosedFormSection,
    FamilyAnalysis,
    InputEcho,
    OracleVerdict,
    ParityScreen,
    Tolerances,
)
from .analyzer import AUTO, MatrixAnalyzer, verdicts_ok
from .matrix_io import (
    detect_format,
    parse_csv_matrix,
    parse_json_matrix,
    parse_octonion_argument,
    read_matrix,
    rows_to_matrix,
)
from .base_formatter import ReportFormatter, normalize_floats
from .json_formatter import JsonFormatter
from .text_formatter import TextFormatter

__all__ = [
    "AnalysisReport",
    "ClosedFormSection",
    "FamilyAnalysis",
    "InputEcho",
    "OracleVerdict",
    "ParityScreen",
    "Tolerances",
    "AUTO",
    "MatrixAnalyzer",
    "verdicts_ok",
    "detect_format",
    "parse_csv_matrix",
    "parse_json_matrix",
    "parse_octonion_argument",
    "read_matrix",
    "rows_to_matrix",
    "ReportFormatter",
    "normalize_floats",
    "JsonFormatter",
    "TextFormatter",
]
