"""
DCT-domain view of a channel.

Within one block a short filter acts, approximately, as a per-bin gain on
the DCT coefficients. These helpers measure that gain and apply such a
multiplicative channel directly.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import signal

from src.shared.dsp import block_count, dct_forward, dct_inverse, frame_blocks
from src.shared.exceptions import ConfigurationError
from src.shared.models import AudioClip, Band
from src.shared.utils import require_vector


def dct_channel_gain(
    impulse_response: ArrayLike, block_len: int, band: Band
) -> NDArray[np.float64]:
    """
    Per-bin effective gain of a filter on DCT basis vectors.

    Each in-band basis vector idct(e_k) is convolved with the impulse
    response, truncated to the block, and projected back on bin k.

    Args:
        impulse_response: Filter taps.
        block_len: Block length in samples.
        band: Bins to measure.

    Returns:
        alpha, one signed gain per band bin.
    """
    taps = require_vector(impulse_response, "impulse_response")
    band.validate_for(block_len)
    basis = dct_inverse(np.eye(block_len)[band.slice], block_len)
    pushed = signal.convolve(basis, taps[np.newaxis, :], mode="full")[:, :block_len]
    spectra = dct_forward(pushed, block_len)
    rows = np.arange(band.width)
    return spectra[rows, band.k_low + rows]


def apply_dct_channel(
    clip: AudioClip, alpha: ArrayLike, block_len: int, band: Band
) -> AudioClip:
    """
    Multiply the in-band DCT coefficients of every whole block by alpha.

    Args:
        clip: Input clip.
        alpha: Per-bin gains, one per band bin.
        block_len: Block length in samples.
        band: Band alpha applies to; other bins pass unchanged.

    Returns:
        Clip with the multiplicative channel applied (trailing partial
        block untouched).

    Raises:
        ConfigurationError: If alpha does not match the band width.
    """
    gains = require_vector(alpha, "alpha")
    if gains.size != band.width:
        raise ConfigurationError(
            f"alpha has {gains.size} gains, band has {band.width} bins"
        )
    band.validate_for(block_len)
    count = block_count(len(clip), block_len)
    if count == 0:
        return clip
    spectra = dct_forward(frame_blocks(clip, 0, block_len, count), block_len)
    spectra[:, band.slice] *= gains
    samples = clip.samples.copy()
    samples[: count * block_len] = dct_inverse(spectra, block_len).reshape(-1)
    return clip.with_samples(samples)
