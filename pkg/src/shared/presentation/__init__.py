"""
Shared presentation module.

Command-line plumbing common to every subcommand.
"""

from src.shared.presentation.cli import (
    EXIT_IO,
    EXIT_NOT_DETECTED,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    CliParser,
    emit_summary,
)

__all__ = [
    "CliParser",
    "EXIT_IO",
    "EXIT_NOT_DETECTED",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VALIDATION",
    "emit_summary",
]
