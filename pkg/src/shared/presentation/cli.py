"""
Command-line plumbing: exit codes, the argument parser and summaries.
"""

import argparse
import json
import sys
from typing import Any, NoReturn

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VALIDATION = 3
EXIT_NOT_DETECTED = 10


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EXIT_USAGE."""

    def error(self, message: str) -> NoReturn:
        """Print usage and the message to stderr, then exit with EXIT_USAGE."""
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def emit_summary(document: dict[str, Any]) -> None:
    """Print a JSON summary to stdout."""
    sys.stdout.write(json.dumps(document, indent=2, sort_keys=True, default=str) + "\n")
    sys.stdout.flush()
