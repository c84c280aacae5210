"""Logging configuration and utilities."""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import coloredlogs

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _rotating_handler(
    path: str, log_config: Dict[str, Any], level: str, formatter: logging.Formatter
) -> logging.Handler:
    handler = logging.handlers.TimedRotatingFileHandler(
        path,
        when=log_config.get("rotation_when", "midnight"),
        interval=log_config.get("rotation_interval", 1),
        backupCount=log_config.get("backup_count", 7),
        encoding="utf-8",
    )
    handler.setLevel(getattr(logging, level))
    handler.setFormatter(formatter)
    return handler


def setup_logging(
    config: Optional[Dict[str, Any]] = None,
    console: bool = True,
    file: Optional[bool] = None,
    level: Optional[str] = None,
) -> logging.Logger:
    """
    Set up logging configuration.

    Console records go to stderr so the report on stdout stays parseable.

    Args:
        config: Settings dictionary with a "logging" section
        console: Enable console logging
        file: Enable file logging (defaults to logging.file_enabled)
        level: Override for logging.level

    Returns:
        Configured root logger
    """
    if config is None:
        config = {}

    log_config = config.get("logging", {})
    level = (level or log_config.get("level", "WARNING")).upper()
    log_format = log_config.get("format", DEFAULT_FORMAT)
    date_format = log_config.get("date_format", DEFAULT_DATE_FORMAT)
    if file is None:
        file = bool(log_config.get("file_enabled", False))

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level))
    root_logger.handlers = []

    if console:
        if sys.stderr.isatty():
            coloredlogs.install(
                level=level,
                fmt=log_format,
                datefmt=date_format,
                stream=sys.stderr,
                field_styles={
                    "asctime": {"color": "green"},
                    "levelname": {"color": "white", "bold": True},
                    "name": {"color": "blue"},
                },
                level_styles={
                    "debug": {"color": "green"},
                    "info": {"color": "white"},
                    "warning": {"color": "yellow"},
                    "error": {"color": "red"},
                    "critical": {"color": "red", "bold": True},
                },
            )
        else:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(getattr(logging, level))
            console_handler.setFormatter(logging.Formatter(log_format, datefmt=date_format))
            root_logger.addHandler(console_handler)

    if file:
        file_path = log_config.get("file_path", "./logs/qminpoly.log")
        error_file_path = log_config.get("error_file_path", "./logs/qminpoly.error.log")
        Path(file_path).parent.mkdir(parents=True, exist_ok=True)
        Path(error_file_path).parent.mkdir(parents=True, exist_ok=True)

        formatter = logging.Formatter(log_format, datefmt=date_format)
        root_logger.addHandler(
            _rotating_handler(
                file_path, log_config, log_config.get("main_log_level", level), formatter
            )
        )
        root_logger.addHandler(
            _rotating_handler(
                error_file_path, log_config, log_config.get("error_log_level", "ERROR"), formatter
            )
        )

    root_logger.debug(f"Logging configured (level {level}, file logging {'on' if file else 'off'})")
    return root_logger


class LoggerAdapter(logging.LoggerAdapter):
    """Prefixes messages with "[key=value, ...]" context."""

    def process(self, msg, kwargs):
        if self.extra:
            context_items = [f"{k}={v}" for k, v in self.extra.items()]
            msg = f"[{', '.join(context_items)}] {msg}"
        return msg, kwargs


def get_context_logger(name: str, **context) -> LoggerAdapter:
    """
    Get a logger with additional context.

    Args:
        name: Logger name
        **context: Context variables to add to all log messages

    Returns:
        Logger adapter with context
    """
    return LoggerAdapter(logging.getLogger(name), context)
