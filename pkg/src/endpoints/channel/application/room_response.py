"""
Synthetic room impulse responses.
"""

import math

import numpy as np
from numpy.typing import NDArray

from src.endpoints.channel.domain.models import SyntheticRoom
from src.shared.models import PROCESSING_RATE
from src.shared.utils import seeded_generator


def synth_rir(
    room: SyntheticRoom, sample_rate: int = PROCESSING_RATE
) -> NDArray[np.float64]:
    """
    Unit direct-path impulse followed by an exponentially decaying
    Gaussian tail.

    The tail amplitude envelope is 10^(-3 t / rt60), so its energy falls by
    60 dB at rt60. The tail is scaled so that the direct (1.0) to tail
    energy ratio equals direct_ratio_db.

    Args:
        room: Room parameters.
        sample_rate: Sample rate of the response.

    Returns:
        Impulse response of length round(length_s * rate) (at least 1).
    """
    length = max(int(round(room.length_s * sample_rate)), 1)
    response = np.zeros(length)
    response[0] = 1.0
    if length == 1 or (math.isinf(room.direct_ratio_db) and room.direct_ratio_db > 0):
        return response

    rng = seeded_generator(room.seed, "room-tail")
    t = np.arange(length) / sample_rate
    tail = rng.standard_normal(length) * np.power(10.0, -3.0 * t / room.rt60_s)
    tail[0] = 0.0
    target_energy = math.pow(10.0, -room.direct_ratio_db / 10.0)
    response += tail * math.sqrt(target_energy / float(np.sum(tail**2)))
    return response
