"""
Linear filtering: FIR convolution and Butterworth low/high-pass.
"""

import numpy as np
from numpy.typing import ArrayLike
from scipy import signal

from src.shared.exceptions import ConfigurationError
from src.shared.models import AudioClip
from src.shared.utils import require_vector

BUTTERWORTH_ORDER = 4


def convolve(clip: AudioClip, impulse_response: ArrayLike) -> AudioClip:
    """
    Full linear convolution with an impulse response, truncated to the
    input length.

    scipy picks direct or FFT evaluation by size; either way the result is
    the causal FIR output y[n] = sum_k h[k] x[n-k].

    Args:
        clip: Input clip.
        impulse_response: FIR taps h[0..M-1].

    Returns:
        Filtered clip with the input's length and sample rate.

    Raises:
        ConfigurationError: If the impulse response is empty or not finite.
    """
    taps = require_vector(impulse_response, "impulse_response")
    if len(clip) == 0:
        return clip
    if taps.size == 1:
        return clip.with_samples(clip.samples * taps[0])
    full = signal.convolve(clip.samples, taps, mode="full", method="auto")
    return clip.with_samples(full[: len(clip)])


def _butterworth(clip: AudioClip, cutoff_hz: float, btype: str) -> AudioClip:
    nyquist = clip.sample_rate / 2.0
    if not 0.0 < cutoff_hz < nyquist:
        raise ConfigurationError(
            f"{btype} cutoff must lie in (0, {nyquist}) Hz, got {cutoff_hz}"
        )
    sos = signal.butter(
        BUTTERWORTH_ORDER, cutoff_hz, btype=btype, fs=clip.sample_rate, output="sos"
    )
    return clip.with_samples(signal.sosfilt(sos, clip.samples))


def lowpass(clip: AudioClip, cutoff_hz: float) -> AudioClip:
    """
    Causal 4th-order Butterworth low-pass.

    Args:
        clip: Input clip.
        cutoff_hz: -3 dB frequency in Hz.

    Returns:
        Filtered clip.
    """
    return _butterworth(clip, cutoff_hz, "lowpass")


def highpass(clip: AudioClip, cutoff_hz: float) -> AudioClip:
    """
    Causal 4th-order Butterworth high-pass.

    Args:
        clip: Input clip.
        cutoff_hz: -3 dB frequency in Hz.

    Returns:
        Filtered clip.
    """
    return _butterworth(clip, cutoff_hz, "highpass")


def gain(clip: AudioClip, gain_db: float) -> AudioClip:
    """Scale a clip by gain_db decibels."""
    if gain_db == 0.0:
        return clip
    return clip.with_samples(clip.samples * np.power(10.0, gain_db / 20.0))
