"""
Legacy spread-spectrum embedding.

Additive marking without projection removal or sign modulation, kept as
the baseline the eigen encoder is compared against.
"""

import numpy as np
from numpy.typing import ArrayLike

from src.endpoints.watermark.application.embed_watermark import check_band_vector
from src.shared.dsp import block_count, dct_forward, dct_inverse, frame_blocks
from src.shared.exceptions import SignalRangeError
from src.shared.models import PROCESSING_RATE, AudioClip, Band


def embed_legacy_ss(
    host: AudioClip, w: ArrayLike, eta: float, block_len: int, band: Band
) -> AudioClip:
    """
    Add eta * w to the band of every whole block: x~ = x + eta w.

    Args:
        host: Host clip at 48 kHz.
        w: Unit watermark vector in band coordinates.
        eta: Watermark strength.
        block_len: Block length in samples.
        band: Embedding band.

    Returns:
        Marked clip (trailing partial block untouched).

    Raises:
        ConfigurationError: On a wrong rate or an invalid watermark.
        SignalRangeError: If the host is shorter than one block.
    """
    host.require_rate(PROCESSING_RATE)
    band.validate_for(block_len)
    vector = check_band_vector(w, band)
    count = block_count(len(host), block_len)
    if count == 0:
        raise SignalRangeError(
            f"host too short: {len(host)} samples, one block needs {block_len}"
        )
    if eta == 0.0:
        return host

    spectra = dct_forward(frame_blocks(host, 0, block_len, count), block_len)
    spectra[:, band.slice] += eta * vector
    samples = host.samples.copy()
    samples[: count * block_len] = dct_inverse(spectra, block_len).reshape(-1)
    return host.with_samples(samples)
