"""
Score trace exports.

The trace goes to CSV (one row per score point), detections to a JSON
summary. Both are written atomically.
"""

import csv
from pathlib import Path
from typing import Any, Iterator, Optional, TextIO

from src.endpoints.detector.domain.models import Detection, ScoreTrace
from src.shared.infrastructure.audio_files import (
    PathLike,
    atomic_text_writer,
    write_json,
)
from src.shared.models import PROCESSING_RATE

TRACE_COLUMNS = ["t_samples", "rho", "rho_bar", "gamma", "decision"]


def trace_rows(trace: ScoreTrace) -> Iterator[list[Any]]:
    """CSV rows of a trace, without the header."""
    gamma = trace.gamma
    decisions = trace.decisions
    for p in range(len(trace)):
        yield [
            int(trace.times[p]),
            repr(float(trace.rho[p])),
            repr(float(trace.rho_bar[p])),
            repr(float(gamma[p])),
            int(decisions[p]),
        ]


class TraceCsvWriter:
    """
    Appends partial traces to a CSV handle.

    Args:
        handle: Text handle opened with newline="".
    """

    def __init__(self, handle: TextIO) -> None:
        """Initialize TraceCsvWriter and write the header."""
        self._writer = csv.writer(handle)
        self._writer.writerow(TRACE_COLUMNS)
        self.rows_written = 0

    def write(self, trace: ScoreTrace) -> None:
        """Append every point of a (partial) trace."""
        for row in trace_rows(trace):
            self._writer.writerow(row)
            self.rows_written += 1


def write_trace_csv(path: PathLike, trace: ScoreTrace) -> Path:
    """
    Write a whole trace as CSV.

    Args:
        path: Destination.
        trace: Trace to export.

    Returns:
        The destination path.
    """
    with atomic_text_writer(path) as handle:
        TraceCsvWriter(handle).write(trace)
    return Path(path)


def detections_document(
    detections: list[Detection],
    points: int,
    sample_rate: int = PROCESSING_RATE,
    extra: Optional[dict[str, Any]] = None,
) -> dict[str, Any]:
    """
    JSON summary of a scan.

    Args:
        detections: Detected runs.
        points: Score points scanned.
        sample_rate: Rate for converting samples to seconds.
        extra: Additional top-level entries (effective config, input).

    Returns:
        JSON-serializable document.
    """
    document: dict[str, Any] = {
        "points": points,
        "detected": bool(detections),
        "detections": [d.to_dict(sample_rate) for d in detections],
    }
    document.update(extra or {})
    return document


def write_detections_json(
    path: PathLike,
    detections: list[Detection],
    points: int,
    sample_rate: int = PROCESSING_RATE,
    extra: Optional[dict[str, Any]] = None,
) -> Path:
    """Write the detections summary atomically."""
    return write_json(path, detections_document(detections, points, sample_rate, extra))
