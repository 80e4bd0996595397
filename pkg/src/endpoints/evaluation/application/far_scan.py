"""
False accept scans over unwatermarked audio.
"""

import numpy as np

from src.endpoints.detector.application.scan import scan
from src.endpoints.detector.domain.models import DecoderParams
from src.endpoints.evaluation.domain.models import FarScanResult
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.infrastructure.logger import get_logger
from src.shared.models import AudioClip

logger = get_logger(__name__)

HEAVY_TAIL_SIGMAS = 5.0
HEAVY_TAIL_FRACTION = 1e-3


def run_far_scan(
    host: AudioClip,
    config: WatermarkConfig,
    bank: WatermarkBank,
    params: DecoderParams | None = None,
) -> FarScanResult:
    """
    Smoothed scores at every stride of an unwatermarked host.

    No decisions are kept; thresholds are swept later. A share of points
    above 5 sigma0 larger than 1e-3 flags the input as suspicious.

    Args:
        host: Audio believed to carry no watermark.
        config: Watermark config scanned for.
        bank: Its bank.
        params: Decoder parameters.

    Returns:
        FarScanResult.
    """
    trace = scan(host, config, bank, params)
    tail = float(np.mean(trace.rho_bar > HEAVY_TAIL_SIGMAS * trace.sigma0))
    heavy = tail > HEAVY_TAIL_FRACTION
    if heavy:
        logger.warning(
            f"FAR scan has {tail:.2%} of points above {HEAVY_TAIL_SIGMAS:g} sigma0; "
            "the host may be watermarked"
        )
    return FarScanResult(trace, heavy)
