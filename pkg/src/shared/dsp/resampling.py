"""
Clock-drift resampling with a windowed-sinc interpolator.

A playback clock off by ppm parts per million is rendered by reading the
input at positions j / (1 + ppm * 1e-6): output sample j lags the input
by about ppm * 1e-6 * j samples and tones are lowered by the factor
1 / (1 + ppm * 1e-6).
"""

import numpy as np
from numpy.typing import NDArray

from src.shared.exceptions import ConfigurationError
from src.shared.models import AudioClip

TAPS = 32
KAISER_BETA = 8.6
MAX_PPM = 10000.0
_HALF = TAPS // 2
_OFFSETS = np.arange(-_HALF + 1, _HALF + 1)
_CHUNK = 16384


def drifted_length(length: int, ppm: float) -> int:
    """
    Natural output length of resample_drift for an input length.

    Args:
        length: Input length in samples.
        ppm: Clock drift in parts per million.

    Returns:
        round(length * (1 + ppm * 1e-6)), or 0 for empty input.
    """
    if length == 0:
        return 0
    return max(1, int(round(length * (1.0 + ppm * 1e-6))))


def _kernel(distance: NDArray[np.float64]) -> NDArray[np.float64]:
    ratio = np.clip(distance / _HALF, -1.0, 1.0)
    window = np.i0(KAISER_BETA * np.sqrt(1.0 - ratio**2)) / np.i0(KAISER_BETA)
    return np.sinc(distance) * window


def resample_drift(clip: AudioClip, ppm: float) -> AudioClip:
    """
    Render a clip as if replayed with a clock drifted by ppm.

    Uses a 32-tap Kaiser-windowed sinc evaluated at the exact fractional
    read position of every output sample. Samples outside the clip are
    taken as zero.

    Args:
        clip: Input clip.
        ppm: Clock drift in parts per million, |ppm| < 10000.

    Returns:
        Resampled clip of drifted_length(len(clip), ppm) samples.

    Raises:
        ConfigurationError: If |ppm| >= 10000.
    """
    if not abs(ppm) < MAX_PPM:
        raise ConfigurationError(f"|ppm| must be below {MAX_PPM}, got {ppm}")
    if ppm == 0.0 or len(clip) == 0:
        return clip

    ratio = 1.0 + ppm * 1e-6
    n_out = drifted_length(len(clip), ppm)
    padded = np.concatenate(
        [np.zeros(_HALF), clip.samples, np.zeros(_HALF + 1)]
    )
    limit = padded.size - 1
    out = np.empty(n_out)

    for start in range(0, n_out, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, n_out), dtype=np.float64)
        position = j / ratio
        base = np.floor(position)
        frac = position - base
        weights = _kernel(frac[:, None] - _OFFSETS[None, :])
        weights /= weights.sum(axis=1, keepdims=True)
        index = base.astype(np.int64)[:, None] + _OFFSETS[None, :] + _HALF
        np.clip(index, 0, limit, out=index)
        out[start : start + j.size] = np.einsum("ij,ij->i", padded[index], weights)

    return clip.with_samples(out)
