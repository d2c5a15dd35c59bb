"""Logging configuration for the lab."""

import logging
import os
import sys
from typing import Optional


def setup_logger(
    name: str,
    level: Optional[int] = None,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Configure and return a logger instance.

    Documents are written to stdout, so log records go to stderr.

    Args:
        name: Logger name
        level: Logging level (default: MFL_LOG_LEVEL or WARNING)
        log_file: Optional file path for logging

    Returns:
        Configured logger instance
    """
    if level is None:
        level = logging.getLevelName(os.getenv("MFL_LOG_LEVEL", "WARNING").upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_level(level: str) -> None:
    """Apply a level name to every logger created by setup_logger."""
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    for logger_name in list(logging.root.manager.loggerDict):
        if logger_name == "src" or logger_name.startswith("src."):
            logger = logging.getLogger(logger_name)
            logger.setLevel(numeric)
            for handler in logger.handlers:
                handler.setLevel(numeric)
