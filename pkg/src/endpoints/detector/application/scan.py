"""
Batch scan of a received clip.
"""

import numpy as np

from src.endpoints.detector.application.noise_statistics import TraceAccumulator
from src.endpoints.detector.application.scoring import point_count, score_points
from src.endpoints.detector.domain.models import DecoderParams, ScoreTrace
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.exceptions import SignalRangeError
from src.shared.infrastructure.logger import get_logger
from src.shared.models import AudioClip

logger = get_logger(__name__)


def raw_scores(
    y: AudioClip, config: WatermarkConfig, bank: WatermarkBank, params: DecoderParams
) -> tuple[np.ndarray, np.ndarray]:
    """
    Raw scores at every stride over a clip.

    Returns:
        (times, rho) arrays; empty when the clip is shorter than one
        watermark.
    """
    y.require_rate(config.sample_rate)
    bank.require_matches(config)
    if params.pair_subset is not None:
        params.pair_subset.validate_for(config)
    count = point_count(len(y), config, params.scan_stride)
    times = np.arange(count, dtype=np.int64) * params.scan_stride
    rho = score_points(
        y.samples, 0, 0, count, params.scan_stride, config, bank, params.pair_subset
    )
    return times, rho


def scan(
    y: AudioClip,
    config: WatermarkConfig,
    bank: WatermarkBank,
    params: DecoderParams | None = None,
) -> ScoreTrace:
    """
    Score a clip at every stride and apply the adaptive threshold.

    Args:
        y: Received clip at 48 kHz.
        config: Config of the watermark looked for.
        bank: Its bank.
        params: Scan parameters (defaults when None).

    Returns:
        Complete ScoreTrace.

    Raises:
        SignalRangeError: If the clip gives noise_window points or fewer.
        ConfigurationError: On a rate or bank mismatch.
    """
    params = params or DecoderParams()
    count = point_count(len(y), config, params.scan_stride)
    if count < params.noise_window + 1:
        raise SignalRangeError(
            f"clip too short for a scan: {len(y)} samples give {count} score points, "
            f"need {params.noise_window + 1} ({params.min_samples(config)} samples)"
        )
    times, rho = raw_scores(y, config, bank, params)
    accumulator = TraceAccumulator(params)
    trace = ScoreTrace.concatenate([accumulator.push(times, rho), accumulator.finish()])
    logger.info(f"Scanned {count} points, {len(trace.detections())} detection(s)")
    return trace
