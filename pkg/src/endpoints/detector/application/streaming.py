"""
Bounded-memory streaming detection.
"""

from typing import Any, Optional

import numpy as np
from numpy.typing import ArrayLike

from src.endpoints.detector.application.noise_statistics import TraceAccumulator
from src.endpoints.detector.application.scoring import score_points
from src.endpoints.detector.domain.models import DecoderParams, Detection, ScoreTrace
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.exceptions import SignalRangeError
from src.shared.infrastructure.logger import get_logger

logger = get_logger(__name__)


class StreamingDetector:
    """
    Detector fed with consecutive chunks of audio.

    Keeps only the samples still needed by future score points, so memory
    stays bounded by one watermark span plus one chunk. Score points lie on
    the same grid as a batch scan and the same statistics are applied, so
    the concatenated output equals scan() on the whole audio.

    Args:
        config: Config of the watermark looked for.
        bank: Its bank.
        params: Scan parameters.
    """

    def __init__(
        self,
        config: WatermarkConfig,
        bank: WatermarkBank,
        params: DecoderParams | None = None,
    ) -> None:
        """Initialize StreamingDetector."""
        bank.require_matches(config)
        self.params = params or DecoderParams()
        if self.params.pair_subset is not None:
            self.params.pair_subset.validate_for(config)
        self.config = config
        self.bank = bank
        self._accumulator = TraceAccumulator(self.params)
        self._buffer = np.empty(0)
        self._origin = 0
        self._next_point = 0
        self._finished = False

    @property
    def latency_samples(self) -> int:
        """Delay between a watermark's end and its decision."""
        smoothing = self.params.smooth_window * self.params.scan_stride
        return self.config.block_len + smoothing

    @property
    def points_scored(self) -> int:
        """Score points evaluated so far."""
        return self._next_point

    def feed(self, samples: ArrayLike) -> ScoreTrace:
        """
        Add audio and return the trace points that became final.

        Args:
            samples: Next chunk of mono samples.

        Returns:
            Possibly empty partial trace.

        Raises:
            SignalRangeError: If called after finish().
        """
        if self._finished:
            raise SignalRangeError("StreamingDetector already finished")
        chunk = np.asarray(samples, dtype=np.float64).reshape(-1)
        self._buffer = np.concatenate([self._buffer, chunk])

        stride = self.params.scan_stride
        available = self._origin + self._buffer.size
        last_point = (available - self.config.duration_samples) // stride
        count = last_point - self._next_point + 1
        if count <= 0:
            return ScoreTrace([], [], [], [], [], self.params.threshold_multiplier)

        rho = score_points(
            self._buffer,
            self._origin,
            self._next_point,
            count,
            stride,
            self.config,
            self.bank,
            self.params.pair_subset,
        )
        times = (self._next_point + np.arange(count, dtype=np.int64)) * stride
        self._next_point += count

        keep_from = self._next_point * stride
        self._buffer = self._buffer[keep_from - self._origin :]
        self._origin = keep_from
        logger.debug(f"Scored {count} points up to sample {int(times[-1])}")
        return self._accumulator.push(times, rho)

    def finish(self) -> ScoreTrace:
        """
        Flush the remaining trace points at end of stream.

        Raises:
            SignalRangeError: If the stream was too short to seed the
                noise statistics.
        """
        self._finished = True
        return self._accumulator.finish()


class RunTracker:
    """
    Finds runs of positive decisions across consecutive partial traces.

    Yields the same detections as ScoreTrace.detections() on the joined
    trace.
    """

    def __init__(self) -> None:
        """Initialize RunTracker."""
        self._open: Optional[list[Any]] = None

    def update(self, trace: ScoreTrace) -> list[Detection]:
        """Consume a partial trace; return the runs it closed."""
        closed = []
        for t, value, flag in zip(
            trace.times.tolist(), trace.rho_bar.tolist(), trace.decisions.tolist()
        ):
            if flag:
                if self._open is None:
                    self._open = [t, t, t, value]
                else:
                    self._open[1] = t
                    if value > self._open[3]:
                        self._open[2], self._open[3] = t, value
            elif self._open is not None:
                closed.append(Detection(*self._open))
                self._open = None
        return closed

    def close(self) -> list[Detection]:
        """Close a run still open at end of stream."""
        if self._open is None:
            return []
        run, self._open = Detection(*self._open), None
        return [run]
