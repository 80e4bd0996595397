"""
Main entry point for the evaluation endpoint.

Runs `eval` on its own, e.g. `python -m src.endpoints.evaluation.main --help`.
"""

import sys

from src.endpoints.evaluation.presentation.cli import register
from src.main import run


def main() -> None:
    """Run the evaluation subcommand."""
    sys.exit(run(None, (register,)))


if __name__ == "__main__":
    main()
