"""
Main entry point for the channel endpoint.

Runs `attack` on its own, e.g. `python -m src.endpoints.channel.main --help`.
"""

import sys

from src.endpoints.channel.presentation.cli import register
from src.main import run


def main() -> None:
    """Run the channel subcommand."""
    sys.exit(run(None, (register,)))


if __name__ == "__main__":
    main()
