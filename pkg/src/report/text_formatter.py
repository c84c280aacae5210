"""Human-readable report output."""

from typing import Any, Dict, List

from colorama import Fore, Style, init

from .base_formatter import ReportFormatter
from .models import AnalysisReport, OracleVerdict

# Initialize colorama for cross-platform colored output
init()

VERDICT_COLORS = {
    "match": Fore.GREEN,
    "annihilates": Fore.YELLOW,
    "undecided": Fore.YELLOW,
    "mismatch": Fore.RED,
}


class TextFormatter(ReportFormatter):
    """Render the report as indented text."""

    @property
    def colored(self) -> bool:
        return bool(self.config.get("colored_output", True))

    @property
    def digits(self) -> int:
        return int(self.config.get("float_digits", 17))

    def _color(self, text: str, color: str) -> str:
        if not self.colored:
            return text
        return f"{color}{text}{Style.RESET_ALL}"

    def _num(self, value: Any) -> str:
        if isinstance(value, bool) or value is None:
            return str(value)
        if isinstance(value, float):
            return f"{value + 0.0:.{self.digits}g}"
        if isinstance(value, list):
            return "[" + ", ".join(self._num(item) for item in value) + "]"
        return str(value)

    def _mapping(self, lines: List[str], data: Dict[str, Any], indent: int) -> None:
        pad = " " * indent
        for key, value in data.items():
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                self._mapping(lines, value, indent + 2)
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{pad}{key}:")
                for item in value:
                    self._mapping(lines, item, indent + 2)
                    lines.append("")
            else:
                lines.append(f"{pad}{key}: {self._num(value)}")

    def _verdict(self, lines: List[str], oracle: OracleVerdict, indent: int) -> None:
        pad = " " * indent
        verdict = self._color(oracle.verdict.upper(), VERDICT_COLORS[oracle.verdict])
        lines.append(f"{pad}oracle: {verdict}")
        if oracle.polynomial is not None:
            lines.append(f"{pad}  oracle polynomial: {self._num(oracle.polynomial)}")
        if oracle.max_difference is not None:
            lines.append(f"{pad}  max difference: {self._num(oracle.max_difference)}")
        lines.append(f"{pad}  residual: {self._num(oracle.residual)}")
        if oracle.message:
            lines.append(f"{pad}  {oracle.message}")

    def format(self, report: AnalysisReport) -> str:
        lines = [
            self._color(f"Minimal polynomial report (v{report.version})", Style.BRIGHT),
            f"input: {report.input.source} ({report.input.dimension}x{report.input.dimension}, "
            f"{report.input.mode})",
        ]

        if report.input.mode == "structured":
            detected = ", ".join(report.detected_families) or "none"
            lines.append(f"detected families: {detected}")
            if report.oracle_polynomial is not None:
                lines.append(f"oracle minimal polynomial: {self._num(report.oracle_polynomial)}")

        for entry in report.families:
            lines.append("")
            lines.append(self._color(f"{entry.family}", Fore.CYAN) + f"  branch {entry.branch}")
            lines.append(f"  polynomial: {entry.polynomial_text}")
            lines.append(f"  coefficients: {self._num(entry.minimal_polynomial)}")
            self._mapping(lines, {"params": entry.params}, 2)
            if entry.margins:
                self._mapping(lines, {"margins": entry.margins}, 2)
            if entry.printed is not None:
                lines.append(f"  printed coefficients: {self._num(entry.printed)} ({entry.note})")
            if entry.screen is not None:
                status = "passed" if entry.screen.passed else f"FAILED {entry.screen.clause}"
                lines.append(f"  parity screen ({entry.screen.kind}): {status}")
            self._verdict(lines, entry.oracle, 2)

        for section in report.closed_forms:
            lines.append("")
            lines.append(self._color(section.label, Fore.CYAN))
            lines.append(f"  polynomial: {section.polynomial_text}")
            lines.append(f"  coefficients: {self._num(section.minimal_polynomial)}")
            if section.details:
                self._mapping(lines, section.details, 2)
            self._verdict(lines, section.oracle, 2)

        for name in ("jordan", "cayley", "svd3", "cl22", "clifford06", "octonion"):
            data = getattr(report, name)
            if data is None:
                continue
            lines.append("")
            lines.append(self._color(name, Fore.CYAN))
            self._mapping(lines, data, 2)

        lines.append("")
        self._mapping(lines, {"tolerances": report.tolerances.model_dump()}, 0)
        for warning in report.warnings:
            lines.append(self._color(f"warning: {warning}", Fore.YELLOW))
        return "\n".join(lines)
