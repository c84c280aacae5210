from .logger import setup_logging, get_context_logger
from .config_validator import ConfigValidator, ConfigValidationError
from .settings import DEFAULT_SETTINGS, load_settings, load_env_file, apply_env_overrides

__all__ = [
    "setup_logging",
    "get_context_logger",
    "ConfigValidator",
    "ConfigValidationError",
    "DEFAULT_SETTINGS",
    "load_settings",
    "load_env_file",
    "apply_env_overrides",
]
