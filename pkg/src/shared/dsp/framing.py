"""
Partitioning of clips into contiguous, non-overlapping blocks.
"""

import numpy as np
from numpy.typing import NDArray

from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.models import AudioClip


def block_count(length: int, block_len: int, offset: int = 0) -> int:
    """
    Number of whole blocks that fit in a signal after an offset.

    Args:
        length: Signal length in samples.
        block_len: Block length in samples.
        offset: First sample of the first block.

    Returns:
        Count of complete blocks (0 if none fit).
    """
    if block_len <= 0:
        raise ConfigurationError(f"block_len must be positive, got {block_len}")
    return max(0, (length - offset) // block_len)


def frame_blocks(
    clip: AudioClip, offset: int, block_len: int, count: int
) -> NDArray[np.float64]:
    """
    Slice count consecutive blocks starting at offset.

    The rows of the result, concatenated, reproduce
    clip.samples[offset : offset + count * block_len] exactly.

    Args:
        clip: Source clip.
        offset: Sample index where the first block starts.
        block_len: Block length in samples.
        count: Number of blocks.

    Returns:
        Array of shape (count, block_len); a copy, safe to modify.

    Raises:
        SignalRangeError: If the request reaches outside the clip.
        ConfigurationError: If block_len or count is not positive.
    """
    if block_len <= 0 or count <= 0:
        raise ConfigurationError(
            f"block_len and count must be positive, got {block_len} and {count}"
        )
    end = offset + count * block_len
    if offset < 0 or end > len(clip):
        raise SignalRangeError(
            f"Blocks [{offset}, {end}) fall outside clip of {len(clip)} samples"
        )
    return clip.samples[offset:end].reshape(count, block_len).copy()
