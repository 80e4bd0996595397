"""
Subcommands of the watermark endpoint: `embed` and `bank export`.
"""

import argparse
from pathlib import Path
from typing import Any

from src.endpoints.watermark.application.embed_watermark import EmbedWatermark
from src.endpoints.watermark.application.perceptual_headroom import PerceptualHeadroom
from src.endpoints.watermark.application.verify_bank import VerifyBank
from src.endpoints.watermark.infrastructure.bank_store import BankStore
from src.shared.infrastructure.audio_files import read_wav, write_wav
from src.shared.infrastructure.logger import get_logger
from src.shared.presentation import EXIT_OK, emit_summary
from src.tool_config import ToolConfig, load_tool_config, with_overrides

logger = get_logger(__name__)


def add_watermark_arguments(parser: argparse.ArgumentParser) -> None:
    """
    Add the flags selecting a watermark: config file, key and shape.

    Args:
        parser: Subcommand parser to extend.
    """
    parser.add_argument("--config", type=Path, help="Tool config JSON")
    parser.add_argument("--key", help="Secret passphrase (overrides the config)")
    parser.add_argument("--sign-key", help="Separate passphrase for the sign sequence")
    parser.add_argument(
        "--duration-s", type=float, help="Watermark duration in seconds"
    )
    parser.add_argument("--beta", type=float, help="Encoding strength")
    parser.add_argument("--bank", type=Path, help="Stored bank JSON to use")


def watermark_overrides(args: argparse.Namespace) -> dict[str, dict[str, Any]]:
    """Config overrides given by the add_watermark_arguments flags."""
    return {
        "watermark": {
            "key": args.key,
            "sign_key": args.sign_key,
            "duration_s": args.duration_s,
            "beta": args.beta,
        },
        "io": {"bank": args.bank},
    }


def _embed_tool(args: argparse.Namespace) -> ToolConfig:
    overrides = watermark_overrides(args)
    overrides["placement"] = {"period_s": args.period_s, "start_s": args.start_s}
    overrides["io"]["bit_depth"] = args.bit_depth
    return with_overrides(load_tool_config(args.config), overrides)


def handle_embed(args: argparse.Namespace) -> int:
    """
    Embed a watermark into a WAV file.

    Args:
        args: Parsed arguments.

    Returns:
        Exit status.
    """
    tool = _embed_tool(args)
    config = tool.watermark_config()
    bank = tool.bank_for(config)
    placement = tool.embed_placement()

    host = read_wav(args.input)
    use_case = EmbedWatermark()
    offsets = use_case.plan(len(host), config, placement)
    marked = use_case.execute(host, config, bank, placement)
    grid = offsets[0] % config.block_len if offsets else 0
    headroom = PerceptualHeadroom().execute(
        host, marked, config.block_len, config.band, grid
    )
    write_wav(args.output, marked, tool.io.bit_depth)

    emit_summary(
        {
            "command": "embed",
            "input": str(args.input),
            "output": str(args.output),
            "insertions": len(offsets),
            "offsets": offsets,
            "watermark": config.describe(),
            "headroom": headroom.to_dict(),
            "effective_config": tool.echo(),
        }
    )
    return EXIT_OK


def handle_bank_export(args: argparse.Namespace) -> int:
    """
    Write the bank of the configured watermark to JSON.

    Args:
        args: Parsed arguments.

    Returns:
        Exit status.
    """
    tool = with_overrides(load_tool_config(args.config), watermark_overrides(args))
    config = tool.watermark_config()
    bank = tool.bank_for(config)
    diagnostics = VerifyBank().execute(bank, config)
    BankStore().save(args.output, bank, config)
    logger.info(f"Exported {bank!r} to {args.output}")

    emit_summary(
        {
            "command": "bank export",
            "output": str(args.output),
            "config_hash": config.config_hash,
            "diagnostics": diagnostics.to_dict(),
            "effective_config": tool.echo(),
        }
    )
    return EXIT_OK


def register(subparsers: Any) -> None:
    """
    Register `embed` and `bank export`.

    Args:
        subparsers: Object returned by add_subparsers on the root parser.
    """
    embed = subparsers.add_parser("embed", help="Embed a watermark into a WAV file")
    embed.add_argument("input", type=Path, help="Host WAV (48 kHz)")
    embed.add_argument("output", type=Path, help="Marked WAV to write")
    add_watermark_arguments(embed)
    embed.add_argument("--period-s", type=float, help="Seconds between insertions")
    embed.add_argument("--start-s", type=float, help="Time of the first insertion")
    embed.add_argument(
        "--bit-depth", type=int, choices=(16, 24), help="Output PCM depth"
    )
    embed.set_defaults(handler=handle_embed)

    bank = subparsers.add_parser("bank", help="Watermark bank operations")
    bank_commands = bank.add_subparsers(dest="bank_command", required=True)
    export = bank_commands.add_parser("export", help="Write the bank as JSON")
    export.add_argument("output", type=Path, help="Bank JSON to write")
    add_watermark_arguments(export)
    export.set_defaults(handler=handle_bank_export)
