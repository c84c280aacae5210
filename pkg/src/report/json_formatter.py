"""JSON report output."""

import json

from .base_formatter import ReportFormatter
from .models import AnalysisReport


class JsonFormatter(ReportFormatter):
    """One JSON object per report; floats use the shortest round-trip repr."""

    def format(self, report: AnalysisReport) -> str:
        return json.dumps(self.payload(report), indent=2, ensure_ascii=False, allow_nan=False)
