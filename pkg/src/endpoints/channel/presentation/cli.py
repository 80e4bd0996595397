"""
Subcommand of the channel endpoint: `attack`.
"""

import argparse
from pathlib import Path
from typing import Any

from src.endpoints.channel.application.apply_channel import apply_channel
from src.shared.infrastructure.audio_files import read_wav, write_wav
from src.shared.infrastructure.logger import get_logger
from src.shared.presentation import EXIT_OK, emit_summary
from src.tool_config import ToolConfig, load_tool_config

logger = get_logger(__name__)

FILTER_SOURCES = ("ir_file", "room", "impulse_response")


def _attack_tool(args: argparse.Namespace) -> ToolConfig:
    """Tool config with the attack flags applied to its channel section."""
    document = load_tool_config(args.config).model_dump(exclude_unset=True)
    channel: dict[str, Any] = dict(document.get("channel") or {})

    # A filter flag replaces whatever filter source the file names.
    if args.ir is not None or args.rt60_s is not None:
        for name in FILTER_SOURCES:
            channel.pop(name, None)
    if args.ir is not None:
        channel["ir_file"] = args.ir
    elif args.rt60_s is not None:
        room: dict[str, Any] = {"rt60_s": args.rt60_s}
        if args.drr_db is not None:
            room["direct_ratio_db"] = args.drr_db
        if args.room_seed is not None:
            room["seed"] = args.room_seed
        channel["room"] = room

    scalars = {
        "drift_ppm": args.drift_ppm,
        "noise_snr_db": args.snr_db,
        "gain_db": args.gain_db,
        "lowpass_hz": args.lowpass_hz,
        "highpass_hz": args.highpass_hz,
        "noise_seed": args.noise_seed,
        "normalize_ir": True if args.normalize_ir else None,
    }
    given = {name: value for name, value in scalars.items() if value is not None}
    channel.update(given)
    if args.bit_depth is not None:
        document["io"] = {**(document.get("io") or {}), "bit_depth": args.bit_depth}
    document["channel"] = channel
    return ToolConfig.model_validate(document)


def handle_attack(args: argparse.Namespace) -> int:
    """
    Pass a WAV file through the simulated acoustic channel.

    Args:
        args: Parsed arguments.

    Returns:
        Exit status.
    """
    tool = _attack_tool(args)
    spec = tool.channel_spec()
    clip = read_wav(args.input)
    received = apply_channel(clip, spec, preserve_length=args.preserve_length)
    write_wav(args.output, received, tool.io.bit_depth)
    logger.info(f"Attacked {args.input} -> {args.output} ({spec!r})")

    emit_summary(
        {
            "command": "attack",
            "input": str(args.input),
            "output": str(args.output),
            "input_samples": len(clip),
            "output_samples": len(received),
            "channel": spec.describe(),
            "effective_config": tool.echo(),
        }
    )
    return EXIT_OK


def register(subparsers: Any) -> None:
    """
    Register `attack`.

    Args:
        subparsers: Object returned by add_subparsers on the root parser.
    """
    attack = subparsers.add_parser("attack", help="Simulate the acoustic channel")
    attack.add_argument("input", type=Path, help="WAV to attack (48 kHz)")
    attack.add_argument("output", type=Path, help="Received WAV to write")
    attack.add_argument("--config", type=Path, help="Tool config JSON")
    source = attack.add_mutually_exclusive_group()
    source.add_argument("--ir", type=Path, help="Measured impulse response WAV")
    source.add_argument(
        "--rt60-s", type=float, help="Synthetic room reverberation time"
    )
    attack.add_argument(
        "--drr-db", type=float, help="Synthetic room direct-to-reverb ratio"
    )
    attack.add_argument("--room-seed", type=int, help="Synthetic room tail seed")
    attack.add_argument(
        "--normalize-ir", action="store_true", help="Scale the IR to unit energy"
    )
    attack.add_argument("--drift-ppm", type=float, help="Clock drift in ppm")
    attack.add_argument("--snr-db", type=float, help="Additive noise SNR in dB")
    attack.add_argument("--gain-db", type=float, help="Gain in dB")
    attack.add_argument("--lowpass-hz", type=float, help="Low-pass cutoff")
    attack.add_argument("--highpass-hz", type=float, help="High-pass cutoff")
    attack.add_argument("--noise-seed", type=int, help="Noise seed")
    attack.add_argument(
        "--bit-depth", type=int, choices=(16, 24), help="Output PCM depth"
    )
    attack.add_argument(
        "--preserve-length",
        action="store_true",
        help="Trim or pad drifted output to the input length",
    )
    attack.set_defaults(handler=handle_attack)
