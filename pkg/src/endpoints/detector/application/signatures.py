"""
Analytic score signatures.

Predicts the score's mean shift under a watermark and its spread without
one, for a channel acting as per-bin gains alpha. alpha enters only
squared, so the prediction is blind to the channel's signs.
"""

import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from src.endpoints.detector.domain.models import HostStatistics, SignatureSummary
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.dsp import dct_forward, frame_blocks
from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.models import AudioClip
from src.shared.utils import require_vector

ZERO_ENERGY = 1e-9


def analytic_signatures(
    config: WatermarkConfig,
    bank: WatermarkBank,
    alpha: ArrayLike,
    host_stats: Optional[HostStatistics] = None,
) -> SignatureSummary:
    """
    Predicted null and signal score parameters.

    The shift is sum_i sum_{n<m} beta^2 <w_i * alpha, w_i * alpha>
    * (g_m g_n) / (h_m h_n). The null spread treats each of the P pair
    terms as an inner product of independent isotropic blocks shaped by
    alpha: std = sqrt(P * sum(alpha^4) / sum(alpha^2)^2).

    Args:
        config: Watermark config.
        bank: Its bank.
        alpha: Per-bin channel gains over the band.
        host_stats: g / h ratios (default 1 everywhere).

    Returns:
        SignatureSummary.

    Raises:
        ConfigurationError: If alpha does not match the band width.
    """
    gains = require_vector(alpha, "alpha")
    if gains.size != bank.band_width:
        raise ConfigurationError(
            f"alpha has {gains.size} gains, band has {bank.band_width} bins"
        )
    ratios = (host_stats or HostStatistics()).ratios_for(config)

    weighted_energy = (bank.vectors**2) @ (gains**2)
    column_sum = ratios.sum(axis=0)
    pair_products = 0.5 * (column_sum**2 - (ratios**2).sum(axis=0))
    shift = config.beta**2 * float(np.dot(weighted_energy, pair_products))

    power = float(np.sum(gains**2))
    spread = 0.0 if power == 0.0 else float(np.sum(gains**4)) / power**2
    return SignatureSummary(0.0, math.sqrt(config.pair_count * spread), shift)


def measure_host_statistics(
    host: AudioClip, received: AudioClip, offset: int, config: WatermarkConfig
) -> HostStatistics:
    """
    g / h ratios of the watermark blocks at offset.

    Args:
        host: Unmarked host (gives g).
        received: Marked, possibly distorted clip (gives h).
        offset: Start of the watermark in both clips.
        config: Watermark config.

    Raises:
        SignalRangeError: If either clip is too short.
    """
    needed = offset + config.duration_samples
    for clip in (host, received):
        if offset < 0 or len(clip) < needed:
            raise SignalRangeError(
                f"Clip of {len(clip)} samples cannot hold the watermark at {offset}"
            )

    def band_norms(clip: AudioClip) -> np.ndarray:
        blocks = frame_blocks(clip, offset, config.block_len, config.n_blocks)
        spectra = dct_forward(blocks, config.block_len)[:, config.band.slice]
        return np.linalg.norm(spectra, axis=1)

    g = band_norms(host)
    h = band_norms(received)
    ratios = np.zeros_like(g)
    live = h >= ZERO_ENERGY
    ratios[live] = g[live] / h[live]
    return HostStatistics(ratios.reshape(config.n_repeats, config.n_segments))
