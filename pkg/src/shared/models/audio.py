"""
Audio carrier models.

AudioClip houses every time-domain signal of the pipeline (host, marked,
received); Band is the DCT bin interval that confines embedding and all
detection inner products.
"""

from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.shared.exceptions import ConfigurationError

PROCESSING_RATE = 48000

# Orthonormal DCT-II coefficients of one block.
BlockSpectrum = NDArray[np.float64]


def _frozen(values: ArrayLike) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


class AudioClip:
    """
    Mono PCM sample sequence with its sample rate.

    Samples are held as a read-only float64 array with nominal range
    [-1, 1]; clips are never mutated after construction.

    Args:
        samples: Sample values (any array-like of reals).
        sample_rate: Sample rate in Hz.

    Raises:
        ConfigurationError: If the rate is not positive, samples are not
            one-dimensional or any sample is NaN/Inf.
    """

    def __init__(self, samples: ArrayLike, sample_rate: int = PROCESSING_RATE) -> None:
        """Initialize AudioClip."""
        if int(sample_rate) <= 0:
            raise ConfigurationError(f"sample_rate must be positive, got {sample_rate}")
        array = _frozen(samples)
        if array.ndim != 1:
            raise ConfigurationError(
                f"AudioClip must be mono (1-D), got shape {array.shape}"
            )
        if not np.all(np.isfinite(array)):
            raise ConfigurationError("AudioClip samples must be finite")
        self.samples = array
        self.sample_rate = int(sample_rate)

    def __len__(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration_s(self) -> float:
        """Clip duration in seconds."""
        return len(self) / self.sample_rate

    def with_samples(self, samples: ArrayLike) -> "AudioClip":
        """
        Build a clip with new samples and the same sample rate.

        Args:
            samples: Replacement samples.

        Returns:
            New AudioClip.
        """
        return AudioClip(samples, self.sample_rate)

    def require_rate(self, rate: int = PROCESSING_RATE) -> None:
        """
        Reject clips that are not at the processing rate.

        Args:
            rate: Required sample rate in Hz.

        Raises:
            ConfigurationError: If the clip's rate differs.
        """
        if self.sample_rate != rate:
            raise ConfigurationError(
                f"Expected {rate} Hz audio, got {self.sample_rate} Hz "
                "(resample externally; inputs are not converted)"
            )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, AudioClip):
            return NotImplemented
        return self.sample_rate == other.sample_rate and np.array_equal(
            self.samples, other.samples
        )

    def __repr__(self) -> str:
        return f"AudioClip(n={len(self)}, sample_rate={self.sample_rate})"


class Band:
    """
    Inclusive DCT bin interval [k_low, k_high].

    Args:
        k_low: First bin (inclusive).
        k_high: Last bin (inclusive).

    Raises:
        ConfigurationError: If the bins are negative, reversed or the band
            is narrower than two bins.
    """

    def __init__(self, k_low: int, k_high: int) -> None:
        """Initialize Band."""
        if k_low < 0 or k_high < k_low:
            raise ConfigurationError(f"Invalid band [{k_low}, {k_high}]")
        if k_high - k_low + 1 < 2:
            raise ConfigurationError(
                f"Band [{k_low}, {k_high}] must span at least two bins"
            )
        self.k_low = int(k_low)
        self.k_high = int(k_high)

    @property
    def width(self) -> int:
        """Number of bins D in the band."""
        return self.k_high - self.k_low + 1

    @property
    def slice(self) -> slice:
        """Slice selecting the band from a spectrum."""
        return slice(self.k_low, self.k_high + 1)

    def validate_for(self, block_len: int) -> None:
        """
        Check the band fits inside a block of the given length.

        Args:
            block_len: Block length in samples.

        Raises:
            ConfigurationError: If k_high >= block_len.
        """
        if self.k_high >= block_len:
            raise ConfigurationError(
                f"Band [{self.k_low}, {self.k_high}] exceeds block length {block_len}"
            )

    @classmethod
    def from_hz(
        cls,
        low_hz: float,
        high_hz: float,
        block_len: int,
        sample_rate: int = PROCESSING_RATE,
    ) -> "Band":
        """
        Build the band covering [low_hz, high_hz] for a DCT-II block.

        Bin k of a length-L orthonormal DCT-II sits at k * fs / (2L) Hz.

        Args:
            low_hz: Lower edge in Hz.
            high_hz: Upper edge in Hz.
            block_len: Block length in samples.
            sample_rate: Sample rate in Hz.

        Returns:
            Band of bins nearest to the requested edges.
        """
        bin_hz = sample_rate / (2.0 * block_len)
        band = cls(int(round(low_hz / bin_hz)), int(round(high_hz / bin_hz)))
        band.validate_for(block_len)
        return band

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Band):
            return NotImplemented
        return (self.k_low, self.k_high) == (other.k_low, other.k_high)

    def __hash__(self) -> int:
        return hash((self.k_low, self.k_high))

    def __repr__(self) -> str:
        return f"Band({self.k_low}, {self.k_high})"
