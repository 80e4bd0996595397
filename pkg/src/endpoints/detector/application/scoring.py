"""
Modulated self-correlation scores.

The score at offset t frames the N_r * N_s watermark blocks starting at t,
normalizes each block's band spectrum by its band energy h, and sums the
sign-modulated inner products of every repeat pair (m > n) of each
segment. Watermark terms add coherently; host terms average out.

Scores at many offsets share block spectra: when the stride divides the
block length, offset t's blocks are grid blocks j + b * q with
q = block_len / stride, so each block spectrum is computed once.
"""

from collections.abc import Callable
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.endpoints.detector.domain.models import PairSubset
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.dsp import band_inner, dct_forward, frame_blocks
from src.shared.exceptions import SignalRangeError
from src.shared.models import AudioClip, Band, BlockSpectrum

ZERO_ENERGY = 1e-9
POINT_CHUNK = 4096

UnitLookup = Callable[[int], NDArray[np.float64]]


def self_corr(a: BlockSpectrum, b: BlockSpectrum, band: Band) -> float:
    """Self-correlation of two received blocks: their band inner product."""
    return band_inner(a, b, band)


def unit_band_spectra(
    blocks: NDArray[np.float64], config: WatermarkConfig
) -> NDArray[np.float64]:
    """
    Band spectra of stacked blocks divided by their band norm h.

    Rows with h below 1e-9 are zeroed so they drop out of every pair.
    """
    band_spectra = dct_forward(blocks, config.block_len)[:, config.band.slice]
    norms = np.linalg.norm(band_spectra, axis=1)
    units = np.zeros_like(band_spectra)
    live = norms >= ZERO_ENERGY
    units[live] = band_spectra[live] / norms[live, np.newaxis]
    return units


def modulated_score(
    units_at: UnitLookup,
    config: WatermarkConfig,
    bank: WatermarkBank,
    pair_subset: Optional[PairSubset] = None,
) -> NDArray[np.float64]:
    """
    Score for a batch of offsets from their normalized block spectra.

    Args:
        units_at: Maps a block index b (0 .. N_r*N_s - 1, b = n*N_s + i)
            to a (T, D) array: block b's unit spectrum at each of T offsets.
        config: Watermark config.
        bank: Bank holding the signs.
        pair_subset: Optional restriction of the pair sum.

    Returns:
        Scores for the T offsets.
    """
    subset = pair_subset or PairSubset()
    max_lag = subset.lag_limit(config)
    terms = []

    for i in subset.segment_indices(config):
        signs = bank.signs[:, i].astype(np.float64)
        if max_lag == config.n_repeats - 1:
            # sum_{n<m} s_m s_n <u_m, u_n> = (|sum s u|^2 - sum |u|^2) / 2
            u = units_at(i)
            acc = signs[0] * u
            energy = np.einsum("td,td->t", u, u)
            for n in range(1, config.n_repeats):
                u = units_at(n * config.n_segments + i)
                acc = acc + signs[n] * u
                energy = energy + np.einsum("td,td->t", u, u)
            term = 0.5 * (np.einsum("td,td->t", acc, acc) - energy)
        else:
            units = [
                units_at(n * config.n_segments + i) for n in range(config.n_repeats)
            ]
            term = np.zeros(units[0].shape[0])
            for lag in range(1, max_lag + 1):
                for n in range(config.n_repeats - lag):
                    term += (
                        signs[n + lag]
                        * signs[n]
                        * np.einsum("td,td->t", units[n + lag], units[n])
                    )
        terms.append(term)
    return np.sum(terms, axis=0)


def score_at(
    y: AudioClip,
    t: int,
    config: WatermarkConfig,
    bank: WatermarkBank,
    pair_subset: Optional[PairSubset] = None,
) -> float:
    """
    Decoding score rho(t) at one offset.

    Args:
        y: Received clip.
        t: Offset of the first watermark block.
        config: Watermark config.
        bank: Bank of the watermark looked for.
        pair_subset: Optional restriction of the pair sum.

    Returns:
        rho(t).

    Raises:
        SignalRangeError: If fewer than N_r * N_s blocks remain after t.
    """
    if t < 0 or t + config.duration_samples > len(y):
        raise SignalRangeError(
            f"Score at {t} needs {config.duration_samples} samples, clip has {len(y)}"
        )
    blocks = frame_blocks(y, t, config.block_len, config.n_blocks)
    units = unit_band_spectra(blocks, config)
    scores = modulated_score(lambda b: units[b : b + 1], config, bank, pair_subset)
    return float(scores[0])


def point_count(length: int, config: WatermarkConfig, stride: int) -> int:
    """Number of offsets 0, stride, ... at which a full watermark span fits."""
    room = length - config.duration_samples
    return 0 if room < 0 else room // stride + 1


def score_points(
    samples: NDArray[np.float64],
    origin: int,
    first_point: int,
    n_points: int,
    stride: int,
    config: WatermarkConfig,
    bank: WatermarkBank,
    pair_subset: Optional[PairSubset] = None,
) -> NDArray[np.float64]:
    """
    Scores at offsets (first_point + p) * stride for p < n_points.

    Args:
        samples: Audio holding every needed sample; samples[0] is the
            absolute sample index origin.
        origin: Absolute index of samples[0].
        first_point: Index of the first score point.
        n_points: Number of score points.
        stride: Samples between score points.
        config: Watermark config.
        bank: Bank of the watermark looked for.
        pair_subset: Optional restriction of the pair sum.

    Returns:
        Array of n_points scores.
    """
    scores = np.empty(n_points)
    if n_points == 0:
        return scores
    clip = AudioClip(samples, config.sample_rate)
    if config.block_len % stride != 0:
        for p in range(n_points):
            t = (first_point + p) * stride - origin
            scores[p] = score_at(clip, t, config, bank, pair_subset)
        return scores

    q = config.block_len // stride
    span_points = (config.n_blocks - 1) * q
    for start in range(0, n_points, POINT_CHUNK):
        count = min(POINT_CHUNK, n_points - start)
        grid_first = first_point + start
        grid_len = count + span_points
        first_sample = grid_first * stride - origin
        last_sample = first_sample + (grid_len - 1) * stride + config.block_len
        blocks = np.lib.stride_tricks.sliding_window_view(
            clip.samples[first_sample:last_sample], config.block_len
        )[::stride]
        units = unit_band_spectra(np.ascontiguousarray(blocks[:grid_len]), config)
        scores[start : start + count] = modulated_score(
            lambda b: units[b * q : b * q + count], config, bank, pair_subset
        )
    return scores
