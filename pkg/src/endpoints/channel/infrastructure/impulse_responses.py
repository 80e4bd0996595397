"""
Measured impulse response files.
"""

import numpy as np
from numpy.typing import NDArray

from src.shared.exceptions import AudioIOError
from src.shared.infrastructure.audio_files import PathLike, read_wav
from src.shared.infrastructure.logger import get_logger
from src.shared.models import PROCESSING_RATE

logger = get_logger(__name__)


def load_impulse_response(path: PathLike) -> NDArray[np.float64]:
    """
    Read a measured room impulse response.

    Args:
        path: Mono (or downmixed) 48 kHz WAV file.

    Returns:
        Impulse response taps.

    Raises:
        AudioIOError: If the file is missing, unreadable, at another rate
            or empty.
    """
    clip = read_wav(path, require_rate=PROCESSING_RATE)
    if len(clip) == 0:
        raise AudioIOError(f"Impulse response file {path} is empty", str(path))
    logger.debug(f"Loaded {len(clip)}-tap impulse response from {path}")
    return np.array(clip.samples)
