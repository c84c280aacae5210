"""Settings: config.yaml, then .env / environment overrides, then validation."""

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .config_validator import ConfigValidationError, ConfigValidator

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS: Dict[str, Any] = {
    "analysis": {
        "membership_tol": 1e-9,
        "branch_tol": 1e-9,
        "oracle_tol": 1e-11,
        "agreement_tol": 1e-7,
    },
    "report": {
        "format": "text",
        "colored_output": True,
        "float_digits": 17,
    },
    "logging": {
        "level": "WARNING",
        "file_enabled": False,
        "file_path": "./logs/qminpoly.log",
        "error_file_path": "./logs/qminpoly.error.log",
        "main_log_level": "INFO",
        "error_log_level": "ERROR",
        "rotation_when": "midnight",
        "rotation_interval": 1,
        "backup_count": 7,
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "date_format": "%Y-%m-%d %H:%M:%S",
    },
}

# Environment variable -> (section, key, converter)
ENV_OVERRIDES = {
    "QMINPOLY_TOL": ("analysis", "membership_tol", float),
    "QMINPOLY_BRANCH_TOL": ("analysis", "branch_tol", float),
    "QMINPOLY_ORACLE_TOL": ("analysis", "oracle_tol", float),
    "QMINPOLY_LOG_LEVEL": ("logging", "level", str.upper),
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_env_file(env_file: Optional[str] = None) -> Optional[Path]:
    """
    Load a .env file into the process environment.

    Args:
        env_file: Explicit path; when absent, cwd/.env and cwd/config/.env are tried

    Returns:
        Path that was loaded, if any
    """
    if env_file and Path(env_file).is_file():
        load_dotenv(env_file)
        logger.info(f"Loaded environment from {env_file}")
        return Path(env_file)

    for path in (Path.cwd() / ".env", Path.cwd() / "config" / ".env"):
        if path.is_file():
            load_dotenv(path)
            logger.info(f"Loaded environment from {path}")
            return path
    return None


def apply_env_overrides(settings: Dict[str, Any]) -> Dict[str, Any]:
    """Apply QMINPOLY_* environment variables on top of the settings."""
    result = copy.deepcopy(settings)
    for variable, (section, key, convert) in ENV_OVERRIDES.items():
        raw = os.getenv(variable)
        if raw is None or raw == "":
            continue
        try:
            value = convert(raw)
        except ValueError:
            raise ConfigValidationError(f"{variable}: cannot parse '{raw}'")
        result.setdefault(section, {})[key] = value
        logger.debug(f"{section}.{key} overridden by {variable}")
    return result


def load_settings(
    config_path: Optional[str] = None, env_file: Optional[str] = None
) -> Dict[str, Any]:
    """
    Load and validate settings.

    Args:
        config_path: YAML file; built-in defaults are used when it does not exist
        env_file: Optional .env file

    Returns:
        Settings dictionary with "analysis", "report" and "logging" sections

    Raises:
        ConfigValidationError: If the file or an override is invalid
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)

    if config_path and Path(config_path).is_file():
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigValidationError(f"{config_path}: invalid YAML: {e}")
        if not isinstance(loaded, dict):
            raise ConfigValidationError(f"{config_path}: top level must be a mapping")
        settings = _merge(settings, loaded)
        logger.debug(f"Configuration loaded from {config_path}")
    elif config_path:
        logger.debug(f"{config_path} not found, using built-in defaults")

    load_env_file(env_file)
    settings = apply_env_overrides(settings)

    for warning in ConfigValidator.validate_config(settings):
        logger.warning(f"Configuration: {warning}")
    return settings
