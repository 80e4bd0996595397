"""
Main entry point for the `eigenmark` command.

Composes the subcommands of every endpoint into one parser and maps
library errors to exit codes.
"""

import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any, Optional

import pydantic

from src.endpoints.channel.presentation.cli import register as register_channel
from src.endpoints.detector.presentation.cli import register as register_detector
from src.endpoints.evaluation.presentation.cli import register as register_evaluation
from src.endpoints.watermark.presentation.cli import register as register_watermark
from src.shared.exceptions import AudioIOError, ValidationError
from src.shared.infrastructure.logger import get_logger, set_level
from src.shared.presentation import EXIT_IO, EXIT_VALIDATION, CliParser

logger = get_logger(__name__)

Registrar = Callable[[Any], None]

REGISTRARS: tuple[Registrar, ...] = (
    register_watermark,
    register_channel,
    register_detector,
    register_evaluation,
)


def build_parser(registrars: Sequence[Registrar] = REGISTRARS) -> CliParser:
    """
    Build the root parser.

    Args:
        registrars: Functions adding subcommands to the parser.

    Returns:
        Parser whose parsed namespaces carry a `handler`.
    """
    parser = CliParser(
        prog="eigenmark",
        description="Reverberation-robust audio watermarking",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for register in registrars:
        register(subparsers)
    return parser


def run(
    argv: Optional[Sequence[str]] = None, registrars: Sequence[Registrar] = REGISTRARS
) -> int:
    """
    Parse arguments and run the chosen subcommand.

    Args:
        argv: Arguments without the program name (default sys.argv[1:]).
        registrars: Subcommands offered.

    Returns:
        Exit status.
    """
    args = build_parser(registrars).parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG)
    try:
        return int(args.handler(args))
    except AudioIOError as exc:
        logger.error(f"I/O error: {exc.message}")
        return EXIT_IO
    except OSError as exc:
        logger.error(f"I/O error: {exc}")
        return EXIT_IO
    except ValidationError as exc:
        logger.error(f"{type(exc).__name__}: {exc.message}")
        return EXIT_VALIDATION
    except pydantic.ValidationError as exc:
        logger.error(f"Invalid config: {exc}")
        return EXIT_VALIDATION


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Console script entry point."""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
