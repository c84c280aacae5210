"""Base report formatter interface."""

import logging
import math
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from .models import AnalysisReport


def normalize_floats(value: Any) -> Any:
    """Replace -0.0 by 0.0 and non-finite floats by None, recursively."""
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return 0.0 if value == 0.0 else value
    if isinstance(value, dict):
        return {key: normalize_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize_floats(item) for item in value]
    return value


class ReportFormatter(ABC):
    """Abstract base class for report formatters."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the formatter.

        Args:
            config: Settings dictionary; only the "report" section is read
        """
        self.config = (config or {}).get("report", {})
        self.logger = logging.getLogger(self.__class__.__name__)

    def payload(self, report: AnalysisReport) -> Dict[str, Any]:
        return normalize_floats(report.model_dump(mode="json"))

    @abstractmethod
    def format(self, report: AnalysisReport) -> str:
        """
        Render a report.

        Args:
            report: Analysis report

        Returns:
            Rendered text (without trailing newline)
        """
        pass
