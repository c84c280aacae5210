"""Validation of the settings dictionary."""

import logging
from typing import Any, Dict, List

logger = logging.getLogger(__name__)

VALID_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
VALID_REPORT_FORMATS = ["text", "json"]
TOLERANCE_KEYS = ["membership_tol", "branch_tol", "oracle_tol", "agreement_tol"]


class ConfigValidationError(Exception):
    """Exception raised when configuration validation fails."""

    pass


class ConfigValidator:
    """Validator for analysis settings."""

    @staticmethod
    def validate_tolerance(value: Any, field_name: str) -> List[str]:
        """
        Validate a positive tolerance.

        Args:
            value: Configured value
            field_name: Dotted field name (for error messages)

        Returns:
            Warnings for values outside the useful range

        Raises:
            ConfigValidationError: If the value is not a positive number
        """
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigValidationError(f"{field_name} must be a number, got {value!r}")
        if value <= 0:
            raise ConfigValidationError(f"{field_name} must be positive, got {value}")

        warnings = []
        if value < 1e-15:
            warnings.append(f"{field_name} ({value:g}) is below double-precision round-off")
        if value > 1e-3:
            warnings.append(f"{field_name} ({value:g}) is very loose; branch decisions may be wrong")
        return warnings

    @staticmethod
    def validate_report(report: Dict[str, Any]) -> None:
        """
        Validate the report section.

        Raises:
            ConfigValidationError: If the section is malformed
        """
        if not isinstance(report, dict):
            raise ConfigValidationError("'report' must be a dictionary")

        fmt = report.get("format", "text")
        if fmt not in VALID_REPORT_FORMATS:
            raise ConfigValidationError(
                f"report.format: invalid value '{fmt}'. "
                f"Valid values: {', '.join(VALID_REPORT_FORMATS)}"
            )

        digits = report.get("float_digits", 17)
        if isinstance(digits, bool) or not isinstance(digits, int) or not 1 <= digits <= 17:
            raise ConfigValidationError("report.float_digits must be an integer in 1..17")

        if not isinstance(report.get("colored_output", True), bool):
            raise ConfigValidationError("report.colored_output must be true or false")

    @staticmethod
    def validate_logging(log_config: Dict[str, Any]) -> None:
        """
        Validate the logging section.

        Raises:
            ConfigValidationError: If a level name is unknown
        """
        if not isinstance(log_config, dict):
            raise ConfigValidationError("'logging' must be a dictionary")

        for key in ("level", "main_log_level", "error_log_level"):
            if key in log_config and str(log_config[key]).upper() not in VALID_LEVELS:
                raise ConfigValidationError(
                    f"logging.{key}: invalid level '{log_config[key]}'. "
                    f"Valid levels: {', '.join(VALID_LEVELS)}"
                )

    @staticmethod
    def validate_config(config: Dict[str, Any]) -> List[str]:
        """
        Validate full settings.

        Args:
            config: Full settings dictionary

        Returns:
            List of warning messages (non-fatal issues)

        Raises:
            ConfigValidationError: If configuration is invalid
        """
        if not isinstance(config, dict):
            raise ConfigValidationError("Configuration must be a mapping")

        warnings = []
        analysis = config.get("analysis", {})
        if not isinstance(analysis, dict):
            raise ConfigValidationError("'analysis' must be a dictionary")

        for key in TOLERANCE_KEYS:
            if key in analysis:
                warnings.extend(
                    ConfigValidator.validate_tolerance(analysis[key], f"analysis.{key}")
                )

        unknown = sorted(set(analysis) - set(TOLERANCE_KEYS))
        if unknown:
            warnings.append(f"analysis: ignoring unknown keys {unknown}")

        if "report" in config:
            ConfigValidator.validate_report(config["report"])
        if "logging" in config:
            ConfigValidator.validate_logging(config["logging"])

        logger.debug("Configuration validated successfully")
        return warnings
