"""
Shared DSP core.

Orthonormal block DCT, framing, band-limited inner products, FIR
convolution, Butterworth filtering and clock-drift resampling. All
functions are pure: inputs are never modified and no state is kept.
"""

from src.shared.dsp.filtering import convolve, gain, highpass, lowpass
from src.shared.dsp.framing import block_count, frame_blocks
from src.shared.dsp.resampling import drifted_length, resample_drift
from src.shared.dsp.transforms import band_inner, dct_forward, dct_inverse

__all__ = [
    "band_inner",
    "block_count",
    "convolve",
    "dct_forward",
    "dct_inverse",
    "drifted_length",
    "frame_blocks",
    "gain",
    "highpass",
    "lowpass",
    "resample_drift",
]
