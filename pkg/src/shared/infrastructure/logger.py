"""
Shared logging infrastructure.

Common logging utilities used across all endpoints for consistent logging.
"""

import logging
import sys
from typing import Optional

from src.shared.infrastructure.settings import get_settings


def get_logger(name: str, level: Optional[int] = None) -> logging.Logger:
    """
    Get a logger instance with consistent configuration.

    Records go to stderr so that stdout stays free for the JSON summaries
    printed by the command-line tool.

    Args:
        name: Logger name, typically __name__ of the calling module.
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
               If None, the EIGENMARK_LOG_LEVEL setting is used.

    Returns:
        Configured logger instance.

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("Embedding started")
    """
    logger = logging.getLogger(name)

    if level is None:
        level = logging.getLevelName(get_settings().log_level)
    logger.setLevel(level)

    # Avoid adding multiple handlers if logger already configured
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG)
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)

    return logger


def set_level(level: int) -> None:
    """
    Change the level of every logger created through get_logger.

    Args:
        level: New logging level.
    """
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.name.startswith("src."):
            logger.setLevel(level)
