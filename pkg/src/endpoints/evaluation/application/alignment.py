"""
Detection rate versus block misalignment.
"""

from collections.abc import Sequence

from src.endpoints.channel.domain.models import ChannelSpec
from src.endpoints.detector.domain.models import DecoderParams
from src.endpoints.evaluation.application.detection_trials import (
    evaluate_windows,
    simulate_reception,
    trial_layout,
)
from src.endpoints.evaluation.application.hosts import assemble_host
from src.endpoints.evaluation.domain.models import HostSource
from src.endpoints.watermark.application.generate_bank import GenerateBank
from src.endpoints.watermark.domain.models import EmbedPlacement, WatermarkConfig
from src.shared.exceptions import ConfigurationError
from src.shared.infrastructure.logger import get_logger
from src.shared.utils import seeded_generator

logger = get_logger(__name__)


def run_alignment_trials(
    sources: Sequence[HostSource],
    config: WatermarkConfig,
    spec: ChannelSpec,
    params: DecoderParams,
    misalignments: Sequence[int],
    trials: int,
    seed: int = 0,
    period_s: float = 2.0,
) -> dict[int, float]:
    """
    TPR when insertions sit a fixed number of samples off the scan grid.

    Insertions go to grid-aligned positions plus the misalignment, so the
    nearest score point is off by exactly that many samples when the
    misalignment is below half the stride. Set scan_stride to block_len to
    reach offsets up to half a block. Every misalignment reuses the same
    host and noise.

    Args:
        sources: Host corpus.
        config: Watermark config.
        spec: Channel.
        params: Decoder parameters.
        misalignments: Sample offsets to test (0 <= m < period).
        trials: Insertions per misalignment.
        seed: Experiment seed.
        period_s: Time between insertions.

    Returns:
        TPR at gamma for each misalignment.
    """
    if trials < 1:
        raise ConfigurationError(f"trials must be >= 1, got {trials}")
    bank = GenerateBank().execute(config)
    lead, period = trial_layout(config, params, period_s)
    if any(m < 0 or m + config.duration_samples > period for m in misalignments):
        raise ConfigurationError(
            "Misalignments must keep each watermark inside its period"
        )
    length = lead + trials * period
    host_rng = seeded_generator(seed, "align-host")
    host = assemble_host(list(sources), lead, period, length, host_rng)
    noise_seed = int(seeded_generator(seed, "align-noise").integers(2**31))
    received_spec = spec.replace(noise_seed=noise_seed)

    rates = {}
    for misalignment in misalignments:
        positions = [lead + misalignment + trial * period for trial in range(trials)]
        placement = EmbedPlacement(lead + misalignment, period)
        trace = simulate_reception(host, config, bank, received_spec, params, placement)
        outcome = evaluate_windows(
            trace, positions, spec.drift_ppm, config.duration_samples
        )
        rates[int(misalignment)] = float(outcome.detected.mean())
        logger.debug(f"Misalignment {misalignment}: TPR {rates[int(misalignment)]:.3f}")
    return rates
