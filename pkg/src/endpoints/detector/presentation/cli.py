"""
Subcommand of the detector endpoint: `detect`.

Batch mode scans the whole file at once; streaming mode reads fixed-size
chunks and reports each detection as soon as its run of positive
decisions closes. Both write the same trace CSV and detections JSON.
"""

import argparse
from pathlib import Path
from typing import Any

from src.endpoints.detector.application.scan import scan
from src.endpoints.detector.application.streaming import RunTracker, StreamingDetector
from src.endpoints.detector.domain.models import DecoderParams, Detection
from src.endpoints.detector.infrastructure.trace_files import (
    TraceCsvWriter,
    write_detections_json,
    write_trace_csv,
)
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.endpoints.watermark.presentation.cli import (
    add_watermark_arguments,
    watermark_overrides,
)
from src.shared.infrastructure.audio_files import (
    atomic_text_writer,
    iter_wav_chunks,
    read_wav,
)
from src.shared.infrastructure.logger import get_logger
from src.shared.presentation import EXIT_NOT_DETECTED, EXIT_OK, emit_summary
from src.shared.utils import require_positive
from src.tool_config import ToolConfig, load_tool_config, with_overrides

logger = get_logger(__name__)

DEFAULT_CHUNK_S = 1.0


def _detect_tool(args: argparse.Namespace) -> ToolConfig:
    overrides = watermark_overrides(args)
    overrides["decoder"] = {
        "scan_stride": args.stride,
        "noise_window": args.noise_window,
        "smooth_window": args.smooth_window,
        "threshold_multiplier": args.threshold,
    }
    return with_overrides(load_tool_config(args.config), overrides)


def _scan_batch(
    path: Path,
    trace_path: Path,
    config: WatermarkConfig,
    bank: WatermarkBank,
    params: DecoderParams,
) -> tuple[list[Detection], int]:
    trace = scan(read_wav(path), config, bank, params)
    write_trace_csv(trace_path, trace)
    return trace.detections(), len(trace)


def _scan_streaming(
    path: Path,
    trace_path: Path,
    config: WatermarkConfig,
    bank: WatermarkBank,
    params: DecoderParams,
    chunk_s: float,
) -> tuple[list[Detection], int]:
    require_positive(chunk_s, "chunk_s")
    chunk_samples = max(1, int(round(chunk_s * config.sample_rate)))
    detector = StreamingDetector(config, bank, params)
    tracker = RunTracker()
    detections: list[Detection] = []
    logger.info(f"Streaming detection, latency {detector.latency_samples} samples")

    with atomic_text_writer(trace_path) as handle:
        writer = TraceCsvWriter(handle)
        for samples in iter_wav_chunks(path, chunk_samples, config.sample_rate):
            partial = detector.feed(samples)
            writer.write(partial)
            for detection in tracker.update(partial):
                logger.info(f"Detected {detection!r} at sample {detection.peak_sample}")
                detections.append(detection)
        final = detector.finish()
        writer.write(final)
        detections.extend(tracker.update(final))
        detections.extend(tracker.close())
    return detections, writer.rows_written


def handle_detect(args: argparse.Namespace) -> int:
    """
    Scan a WAV file for the configured watermark.

    Args:
        args: Parsed arguments.

    Returns:
        EXIT_OK when at least one detection was made, else EXIT_NOT_DETECTED.
    """
    tool = _detect_tool(args)
    config = tool.watermark_config()
    bank = tool.bank_for(config)
    params = tool.decoder_params()
    trace_path = args.trace_csv or args.input.with_suffix(".trace.csv")
    detections_path = args.detections_json or args.input.with_suffix(".detections.json")

    if args.streaming:
        detections, points = _scan_streaming(
            args.input, trace_path, config, bank, params, args.chunk_s
        )
    else:
        detections, points = _scan_batch(args.input, trace_path, config, bank, params)

    extra = {
        "command": "detect",
        "mode": "streaming" if args.streaming else "batch",
        "input": str(args.input),
        "trace_csv": str(trace_path),
        "decoder": params.describe(),
        "effective_config": tool.echo(),
    }
    write_detections_json(
        detections_path, detections, points, config.sample_rate, extra
    )
    emit_summary(
        {
            **extra,
            "points": points,
            "detected": bool(detections),
            "detections": [d.to_dict(config.sample_rate) for d in detections],
            "detections_json": str(detections_path),
        }
    )
    return EXIT_OK if detections else EXIT_NOT_DETECTED


def register(subparsers: Any) -> None:
    """
    Register `detect`.

    Args:
        subparsers: Object returned by add_subparsers on the root parser.
    """
    detect = subparsers.add_parser("detect", help="Scan a WAV file for a watermark")
    detect.add_argument("input", type=Path, help="Received WAV (48 kHz)")
    add_watermark_arguments(detect)
    detect.add_argument(
        "--trace-csv", type=Path, help="Trace CSV (default IN.trace.csv)"
    )
    detect.add_argument(
        "--detections-json",
        type=Path,
        help="Detections JSON (default IN.detections.json)",
    )
    detect.add_argument("--stride", type=int, help="Samples between score points")
    detect.add_argument("--noise-window", type=int, help="Noise window (points)")
    detect.add_argument("--smooth-window", type=int, help="Smoothing window (points)")
    detect.add_argument("--threshold", type=float, help="Threshold in noise deviations")
    detect.add_argument("--streaming", action="store_true", help="Chunked detection")
    detect.add_argument(
        "--chunk-s",
        type=float,
        default=DEFAULT_CHUNK_S,
        help="Chunk length in seconds for --streaming",
    )
    detect.set_defaults(handler=handle_detect)
