"""
Time-domain channel simulation.
"""

import numpy as np

from src.endpoints.channel.domain.models import ChannelSpec
from src.shared.dsp import convolve, gain, highpass, lowpass, resample_drift
from src.shared.infrastructure.logger import get_logger
from src.shared.models import PROCESSING_RATE, AudioClip
from src.shared.utils import seeded_generator

logger = get_logger(__name__)


def apply_channel(
    clip: AudioClip, spec: ChannelSpec, preserve_length: bool = True
) -> AudioClip:
    """
    Pass a clip through a simulated channel.

    Order: gain, convolution with the impulse response, low-pass,
    high-pass, drift resampling, additive white Gaussian noise. The noise
    is scaled so that its RMS over the whole clip hits the SNR exactly.

    Args:
        clip: Input at 48 kHz.
        spec: Channel description.
        preserve_length: Trim or zero-pad the drifted signal back to the
            input length (the default); False keeps the drifted length.

    Returns:
        Received clip.

    Raises:
        ConfigurationError: On a wrong sample rate or invalid cutoffs.
    """
    clip.require_rate(PROCESSING_RATE)
    out = gain(clip, spec.gain_db)
    out = convolve(out, spec.impulse_response)
    if spec.lowpass_hz is not None:
        out = lowpass(out, spec.lowpass_hz)
    if spec.highpass_hz is not None:
        out = highpass(out, spec.highpass_hz)
    if spec.drift_ppm != 0.0:
        out = resample_drift(out, spec.drift_ppm)
        if preserve_length:
            out = _fit_length(out, len(clip))
    if spec.noise_snr_db is not None:
        out = _add_noise(out, spec.noise_snr_db, spec.noise_seed)
    return out


def _fit_length(clip: AudioClip, length: int) -> AudioClip:
    if len(clip) >= length:
        return clip.with_samples(clip.samples[:length])
    return clip.with_samples(np.pad(clip.samples, (0, length - len(clip))))


def _add_noise(clip: AudioClip, snr_db: float, seed: int) -> AudioClip:
    if len(clip) == 0:
        return clip
    signal_rms = float(np.sqrt(np.mean(clip.samples**2)))
    if signal_rms == 0.0:
        logger.warning("Silent input: SNR is undefined, no noise added")
        return clip
    noise = seeded_generator(seed, "channel-noise").standard_normal(len(clip))
    noise *= signal_rms / np.power(10.0, snr_db / 20.0) / np.sqrt(np.mean(noise**2))
    return clip.with_samples(clip.samples + noise)
