"""
Detection trials over an experiment grid.

Each cell embeds the watermark at known positions, passes the host
through the cell's channel and scans it; the same layout on an
independent unmarked host gives the null scores. A trial counts as
detected when a positive decision falls within half a watermark duration
of the insertion, after mapping the insertion through the clock drift.
"""

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.endpoints.channel.application.apply_channel import apply_channel
from src.endpoints.channel.domain.models import ChannelSpec
from src.endpoints.detector.application.scan import scan
from src.endpoints.detector.domain.models import DecoderParams, ScoreTrace
from src.endpoints.evaluation.application.far_scan import run_far_scan
from src.endpoints.evaluation.application.hosts import assemble_host
from src.endpoints.evaluation.domain.models import CellResult, Experiment
from src.endpoints.watermark.application.embed_watermark import EmbedWatermark
from src.endpoints.watermark.application.generate_bank import GenerateBank
from src.endpoints.watermark.domain.models import (
    EmbedPlacement,
    WatermarkBank,
    WatermarkConfig,
)
from src.shared.infrastructure.logger import get_logger
from src.shared.infrastructure.settings import get_settings
from src.shared.models import PROCESSING_RATE, AudioClip
from src.shared.utils import seeded_generator

logger = get_logger(__name__)


class WindowOutcome:
    """
    Scan results around a set of expected watermark positions.

    Args:
        max_rho_bar: Largest smoothed score in each window.
        detected: Whether each window holds a positive decision.
        raw_rho: Raw score at the point nearest each position.
    """

    def __init__(
        self,
        max_rho_bar: NDArray[np.float64],
        detected: NDArray[np.bool_],
        raw_rho: NDArray[np.float64],
    ) -> None:
        """Initialize WindowOutcome."""
        self.max_rho_bar = max_rho_bar
        self.detected = detected
        self.raw_rho = raw_rho


def trial_layout(
    config: WatermarkConfig, params: DecoderParams, period_s: float
) -> tuple[int, int]:
    """
    Lead-in and period, both multiples of the scan stride.

    The lead-in covers the noise window plus one watermark so the noise
    statistics are seeded on unmarked audio.
    """
    stride = params.scan_stride
    lead = params.noise_window * stride + config.duration_samples
    period = int(round(period_s * PROCESSING_RATE))
    return _round_up(lead, stride), _round_up(period, stride)


def evaluate_windows(
    trace: ScoreTrace, positions: list[int], drift_ppm: float, duration: int
) -> WindowOutcome:
    """
    Summarize a trace around expected watermark positions.

    Args:
        trace: Scan of the received clip.
        positions: Insertion offsets in the transmitted clip.
        drift_ppm: Channel drift; position p is received near p * (1 + ppm 1e-6).
        duration: Watermark length; windows span +/- duration / 2.

    Returns:
        WindowOutcome with one entry per position.
    """
    decisions = trace.decisions
    count = len(positions)
    max_rho_bar = np.full(count, -np.inf)
    detected = np.zeros(count, dtype=bool)
    raw_rho = np.zeros(count)
    for n, position in enumerate(positions):
        centre = position * (1.0 + drift_ppm * 1e-6)
        lo = int(np.searchsorted(trace.times, centre - duration / 2.0, side="left"))
        hi = int(np.searchsorted(trace.times, centre + duration / 2.0, side="right"))
        if hi > lo:
            max_rho_bar[n] = float(trace.rho_bar[lo:hi].max())
            detected[n] = bool(decisions[lo:hi].any())
        nearest = int(np.clip(np.searchsorted(trace.times, centre), 0, len(trace) - 1))
        raw_rho[n] = trace.rho[nearest]
    return WindowOutcome(max_rho_bar, detected, raw_rho)


def simulate_reception(
    host: AudioClip,
    config: WatermarkConfig,
    bank: WatermarkBank,
    spec: ChannelSpec,
    params: DecoderParams,
    placement: Optional[EmbedPlacement],
) -> ScoreTrace:
    """Embed (unless placement is None), apply the channel and scan."""
    marked = host
    if placement is not None:
        marked = EmbedWatermark().execute(host, config, bank, placement)
    return scan(apply_channel(marked, spec), config, bank, params)


def run_cell(experiment: Experiment, cell_index: int) -> CellResult:
    """
    Run every trial of one cell.

    Args:
        experiment: The experiment.
        cell_index: Index into experiment.cells().

    Returns:
        CellResult for the cell.
    """
    _, config_index, channel_index = experiment.cells()[cell_index]
    config = experiment.config_grid[config_index]
    case = experiment.channel_grid[channel_index]
    unmarked = experiment.unmarked[config_index]
    params = experiment.decoder
    bank = GenerateBank().execute(config)

    lead, period = trial_layout(config, params, experiment.period_s)
    positions = [lead + trial * period for trial in range(experiment.trials_per_cell)]
    length = lead + experiment.trials_per_cell * period
    null_length = max(length, int(round(experiment.fa_duration_s * PROCESSING_RATE)))

    def stream(purpose: str) -> np.random.Generator:
        return seeded_generator(experiment.seed, cell_index, purpose)

    host = assemble_host(experiment.host_corpus, lead, period, length, stream("host"))
    null_host = assemble_host(
        experiment.host_corpus, lead, period, null_length, stream("null-host")
    )
    signal_spec = case.spec.replace(noise_seed=int(stream("noise").integers(2**31)))
    null_spec = case.spec.replace(noise_seed=int(stream("null-noise").integers(2**31)))

    placement = None if unmarked else EmbedPlacement(lead, period)
    signal_trace = simulate_reception(
        host, config, bank, signal_spec, params, placement
    )
    far_scan = run_far_scan(apply_channel(null_host, null_spec), config, bank, params)
    null_trace = far_scan.trace

    drift = case.spec.drift_ppm
    signal = evaluate_windows(signal_trace, positions, drift, config.duration_samples)
    null = evaluate_windows(null_trace, positions, drift, config.duration_samples)
    result = CellResult(
        index=cell_index,
        config_label=experiment.config_label(config_index),
        channel_label=case.label,
        duration_s=config.duration_s,
        drift_ppm=drift,
        beta=0.0 if unmarked else config.beta,
        config_hash=config.config_hash,
        signal_scores=signal.max_rho_bar,
        signal_detected=signal.detected,
        null_scores=null.max_rho_bar,
        null_detected=null.detected,
        null_points=null_trace.rho_bar,
        null_point_far=float(null_trace.decisions.mean()),
        raw_signal_rho=signal.raw_rho,
        raw_null_rho=null.raw_rho,
        mean_gamma=float(null_trace.gamma.mean()),
        null_heavy_tail=far_scan.heavy_tail,
    )
    logger.debug(f"Finished cell {cell_index}: {result!r}")
    return result


def run_detection_trials(
    experiment: Experiment, workers: Optional[int] = None
) -> list[CellResult]:
    """
    Run every cell of an experiment.

    Cells are independent; with more than one worker they run in a pool of
    spawned processes. Results are ordered by cell index whatever the completion order.

    Args:
        experiment: The experiment.
        workers: Pool size (default: the EIGENMARK_WORKERS setting).

    Returns:
        One CellResult per cell.
    """
    workers = workers or get_settings().workers
    indices = [index for index, _, _ in experiment.cells()]
    logger.info(
        f"Running {len(indices)} cell(s) x {experiment.trials_per_cell} trial(s)"
    )
    if workers == 1 or len(indices) == 1:
        results = [run_cell(experiment, index) for index in indices]
    else:
        # No fork: numpy may already be running threads.
        context = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=workers, mp_context=context) as pool:
            results = list(pool.map(run_cell, repeat(experiment), indices))
    logger.info(f"Finished {len(results)} cell(s)")
    return results


def _round_up(value: int, multiple: int) -> int:
    return -(-value // multiple) * multiple
