"""
EmbedWatermark use case.

Bi-layer sign-modulated eigen embedding with per-block projection removal.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.endpoints.watermark.domain.models import (
    EmbedPlacement,
    WatermarkBank,
    WatermarkConfig,
)
from src.shared.dsp import dct_forward, dct_inverse
from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.infrastructure.logger import get_logger
from src.shared.models import AudioClip, Band, BlockSpectrum

logger = get_logger(__name__)

UNIT_TOLERANCE = 1e-6


def check_band_vector(w: ArrayLike, band: Band) -> NDArray[np.float64]:
    """
    Validate a unit-norm band vector.

    Args:
        w: Candidate watermark in band coordinates.
        band: Band it must span.

    Returns:
        w as a float64 array.

    Raises:
        ConfigurationError: If the length is not D or the norm is not 1.
    """
    vector = np.asarray(w, dtype=np.float64)
    if vector.shape != (band.width,):
        raise ConfigurationError(
            f"Watermark has shape {vector.shape}, band needs ({band.width},)"
        )
    norm = float(np.linalg.norm(vector))
    if abs(norm - 1.0) > UNIT_TOLERANCE:
        raise ConfigurationError(f"Watermark must have unit norm, got {norm:.9f}")
    return vector


def embed_eigen_block(
    spectrum: BlockSpectrum, w: ArrayLike, eta: float, band: Band
) -> BlockSpectrum:
    """
    Replace the host's component along w by eta * w inside the band.

    x~ = x - <x, w> w + eta w, so <x~, w> = eta exactly; coefficients
    outside the band are unchanged.

    Args:
        spectrum: Host block spectrum x.
        w: Unit watermark vector in band coordinates.
        eta: Target projection.
        band: Embedding band.

    Returns:
        New spectrum x~.

    Raises:
        ConfigurationError: If w is not unit norm or does not fit the band.
    """
    vector = check_band_vector(w, band)
    out = np.array(spectrum, dtype=np.float64)
    band.validate_for(out.shape[-1])
    host = out[band.slice]
    out[band.slice] = host - np.dot(host, vector) * vector + eta * vector
    return out


class EmbedWatermark:
    """
    Use case for embedding a watermark layer into host audio.

    For repeat n and segment i, the original host block's band energy gives
    g = sqrt(<x, x>); the block is then rebuilt with projection along w_i
    equal to beta * s_{n,i} * g. Blocks with g below SILENCE_THRESHOLD
    stay unmarked. Audio outside watermark spans is untouched.
    """

    SILENCE_THRESHOLD = 1e-6

    def plan(
        self, host_length: int, config: WatermarkConfig, placement: EmbedPlacement
    ) -> list[int]:
        """
        Insertion offsets for a host of the given length.

        Args:
            host_length: Host length in samples.
            config: Watermark config.
            placement: Start and repeat period.

        Returns:
            Offsets of every whole watermark that fits.
        """
        return placement.offsets(host_length, config)

    def execute(
        self,
        host: AudioClip,
        config: WatermarkConfig,
        bank: WatermarkBank,
        placement: EmbedPlacement | None = None,
    ) -> AudioClip:
        """
        Embed the watermark at every planned offset.

        Args:
            host: Host clip at 48 kHz.
            config: Watermark config.
            bank: Bank generated for config.
            placement: Where to insert (default: once at sample 0).

        Returns:
            Marked clip.

        Raises:
            ConfigurationError: On a wrong sample rate or a bank that does
                not belong to config.
            SignalRangeError: If not even one watermark fits.
        """
        placement = placement or EmbedPlacement()
        host.require_rate(config.sample_rate)
        bank.require_matches(config)
        offsets = self.plan(len(host), config, placement)
        if not offsets:
            raise SignalRangeError(
                f"host too short: {len(host)} samples after offset "
                f"{placement.start_offset}, watermark needs {config.duration_samples}"
            )

        samples = host.samples.copy()
        span = config.duration_samples
        for offset in offsets:
            samples[offset : offset + span] = self._embed_span(
                host.samples[offset : offset + span], config, bank
            )
        logger.info(
            f"Embedded {len(offsets)} watermark(s) of {config.duration_s:.3f} s "
            f"(beta={config.beta})"
        )
        return host.with_samples(samples)

    def _embed_span(
        self, span: NDArray[np.float64], config: WatermarkConfig, bank: WatermarkBank
    ) -> NDArray[np.float64]:
        band = config.band
        blocks = span.reshape(config.n_blocks, config.block_len)
        spectra = dct_forward(blocks, config.block_len)
        host_band = spectra[:, band.slice]

        vectors = bank.block_vectors()
        gains = np.linalg.norm(host_band, axis=1)
        eta = config.beta * bank.block_signs() * gains
        projection = np.einsum("ij,ij->i", host_band, vectors)
        active = gains >= self.SILENCE_THRESHOLD

        marked = host_band - projection[:, None] * vectors + eta[:, None] * vectors
        spectra[active, band.slice] = marked[active]

        out = blocks.copy()
        if not active.any():
            return out.reshape(-1)
        out[active] = dct_inverse(spectra[active], config.block_len)
        if config.crossfade_ms > 0.0:
            taper = _edge_taper(
                config.block_len, config.crossfade_ms, config.sample_rate
            )
            out[active] = blocks[active] + (out[active] - blocks[active]) * taper
        return out.reshape(-1)


def _edge_taper(
    block_len: int, crossfade_ms: float, sample_rate: int
) -> NDArray[np.float64]:
    """Raised-cosine ramps of crossfade_ms at both ends of a block."""
    ramp_len = min(int(round(crossfade_ms * 1e-3 * sample_rate)), block_len // 2)
    taper = np.ones(block_len)
    if ramp_len > 0:
        ramp = 0.5 - 0.5 * np.cos(np.pi * (np.arange(ramp_len) + 0.5) / ramp_len)
        taper[:ramp_len] = ramp
        taper[-ramp_len:] = ramp[::-1]
    return taper
