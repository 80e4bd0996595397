"""
Cross-correlation baseline detector.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.shared.dsp import block_count, dct_forward, frame_blocks
from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.models import AudioClip, Band


def detect_legacy(
    y: AudioClip, w: ArrayLike, block_len: int, band: Band
) -> NDArray[np.float64]:
    """
    Per-block correlation with a stored template: rho_b = <y_b, w> over
    the band.

    Args:
        y: Received clip.
        w: Template in band coordinates.
        block_len: Block length in samples.
        band: Band the template lives in.

    Returns:
        One score per whole block.

    Raises:
        ConfigurationError: If w does not match the band.
        SignalRangeError: If the clip is shorter than one block.
    """
    template = np.asarray(w, dtype=np.float64)
    if template.shape != (band.width,):
        raise ConfigurationError(
            f"Template has shape {template.shape}, band needs ({band.width},)"
        )
    band.validate_for(block_len)
    count = block_count(len(y), block_len)
    if count == 0:
        raise SignalRangeError(
            f"Clip of {len(y)} samples holds no {block_len}-sample block"
        )
    spectra = dct_forward(frame_blocks(y, 0, block_len, count), block_len)
    return spectra[:, band.slice] @ template
