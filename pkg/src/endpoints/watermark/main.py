"""
Main entry point for the watermark endpoint.

Runs `embed` and `bank export` on their own, e.g.
`python -m src.endpoints.watermark.main --help`.
"""

import sys

from src.endpoints.watermark.presentation.cli import register
from src.main import run


def main() -> None:
    """Run the watermark subcommands."""
    sys.exit(run(None, (register,)))


if __name__ == "__main__":
    main()
