"""
Main entry point for the detector endpoint.

Runs `detect` on its own, e.g. `python -m src.endpoints.detector.main --help`.
"""

import sys

from src.endpoints.detector.presentation.cli import register
from src.main import run


def main() -> None:
    """Run the detector subcommand."""
    sys.exit(run(None, (register,)))


if __name__ == "__main__":
    main()
