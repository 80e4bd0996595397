"""
Pytest fixtures for detector endpoint tests.
"""

import numpy as np
import pytest

from src.endpoints.detector.domain.models import DecoderParams
from src.endpoints.watermark.application.embed_watermark import EmbedWatermark
from src.endpoints.watermark.domain.models import (
    EmbedPlacement,
    WatermarkBank,
    WatermarkConfig,
)
from src.shared.models import AudioClip

MARK_OFFSET = 48000


@pytest.fixture
def scan_params() -> DecoderParams:
    """
    Provide scan parameters sized for three-second clips.

    Returns:
        DecoderParams with a half-block stride and a 50-point noise window.
    """
    return DecoderParams(scan_stride=240, noise_window=50, smooth_window=2)


@pytest.fixture
def marked_clip(
    white_clip: AudioClip, small_config: WatermarkConfig, small_bank: WatermarkBank
) -> AudioClip:
    """
    Provide white noise carrying the small watermark at one second.

    Returns:
        Three-second clip marked at sample MARK_OFFSET.
    """
    return EmbedWatermark().execute(
        white_clip, small_config, small_bank, EmbedPlacement(start_offset=MARK_OFFSET)
    )
