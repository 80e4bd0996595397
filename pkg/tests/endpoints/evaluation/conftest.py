"""
Pytest fixtures for evaluation endpoint tests.
"""

from collections.abc import Callable

import numpy as np
import pytest

from src.endpoints.channel.domain.models import ChannelSpec
from src.endpoints.detector.domain.models import DecoderParams
from src.endpoints.evaluation.domain.models import (
    CellResult,
    ChannelCase,
    Experiment,
    HostSource,
)
from src.endpoints.watermark.domain.models import WatermarkConfig


@pytest.fixture
def scan_params() -> DecoderParams:
    """
    Provide scan parameters sized for short trial hosts.

    Returns:
        DecoderParams with a half-block stride and a 50-point noise window.
    """
    return DecoderParams(scan_stride=240, noise_window=50, smooth_window=2)


@pytest.fixture
def tiny_experiment(
    small_config: WatermarkConfig, scan_params: DecoderParams
) -> Experiment:
    """
    Provide a one-cell experiment: five insertions over a flat channel.

    Returns:
        Experiment with a one-second period and no extra null scan.
    """
    return Experiment(
        host_corpus=[HostSource("white")],
        config_grid=[small_config],
        channel_grid=[ChannelCase("flat", ChannelSpec())],
        trials_per_cell=5,
        seed=3,
        period_s=1.0,
        decoder=scan_params,
    )


@pytest.fixture
def make_cell() -> Callable[..., CellResult]:
    """
    Provide a factory of hand-made cell results.

    Returns:
        Callable building a CellResult from signal and null-point scores.
    """

    def _make(
        index: int,
        signal: list[float],
        null_points: np.ndarray,
        duration_s: float = 1.0,
        drift_ppm: float = 0.0,
        beta: float = 0.1,
    ) -> CellResult:
        count = len(signal)
        return CellResult(
            index=index,
            config_label=f"dur{duration_s:g}s_beta{beta:g}",
            channel_label=f"flat_ppm{drift_ppm:g}",
            duration_s=duration_s,
            drift_ppm=drift_ppm,
            beta=beta,
            config_hash=f"hash{index}",
            signal_scores=signal,
            signal_detected=[s >= 3.0 for s in signal],
            null_scores=np.zeros(count),
            null_detected=np.zeros(count, dtype=bool),
            null_points=null_points,
            null_point_far=0.0,
            raw_signal_rho=np.asarray(signal, dtype=np.float64),
            raw_null_rho=np.linspace(-1.0, 1.0, count),
            mean_gamma=3.0,
        )

    return _make
