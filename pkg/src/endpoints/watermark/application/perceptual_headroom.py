"""
PerceptualHeadroom use case.

Objective stand-ins for the imperceptibility of a mark: per-block
watermark-to-host band energy ratio and the peak sample change.

Within a marked block the band change is parallel to the watermark
vector, so the watermark component is the marked band content along the
direction of change. For an eigen mark that is exactly eta * w, the host
projection having been removed.
"""

import numpy as np
from numpy.typing import NDArray

from src.endpoints.watermark.domain.models import HeadroomReport
from src.shared.dsp import block_count, dct_forward, frame_blocks
from src.shared.exceptions import SignalRangeError
from src.shared.models import AudioClip, Band

ZERO_ENERGY = 1e-20


class PerceptualHeadroom:
    """
    Use case comparing a marked clip with its host, block by block.
    """

    def execute(
        self,
        host: AudioClip,
        marked: AudioClip,
        block_len: int,
        band: Band,
        offset: int = 0,
    ) -> HeadroomReport:
        """
        Measure the watermark component of each block against the host
        block's band energy.

        Args:
            host: Original clip.
            marked: Marked clip of the same length.
            block_len: Block length in samples.
            band: Band the ratios are computed over.
            offset: First sample of the block grid the mark was embedded on.

        Returns:
            HeadroomReport; ratios are -inf dB for unchanged blocks and nan
            for zero-energy host blocks, which are also listed. The mean
            ratio averages the dB values of the changed blocks.

        Raises:
            SignalRangeError: If the clips differ in length.
        """
        if len(host) != len(marked):
            raise SignalRangeError(
                f"Host has {len(host)} samples but marked clip has {len(marked)}"
            )
        band.validate_for(block_len)
        delta = marked.samples - host.samples
        peak = float(np.max(np.abs(delta))) if delta.size else 0.0

        count = block_count(len(host), block_len, offset)
        if count == 0:
            return HeadroomReport(np.empty(0), float("nan"), float("nan"), peak, [])

        host_band = _band_spectra(host, offset, block_len, count, band)
        marked_band = _band_spectra(marked, offset, block_len, count, band)
        delta_band = marked_band - host_band
        host_energy = np.sum(host_band**2, axis=1)
        delta_energy = np.sum(delta_band**2, axis=1)
        silent = host_energy < ZERO_ENERGY

        changed = delta_energy > 0.0
        along = np.zeros(count)
        along[changed] = np.einsum(
            "bd,bd->b", marked_band[changed], delta_band[changed]
        ) / np.sqrt(delta_energy[changed])
        component = along**2

        with np.errstate(divide="ignore", invalid="ignore"):
            ratios = 10.0 * np.log10(component / host_energy)
            ratios[~changed] = -np.inf
            ratios[silent] = np.nan
            total_host = host_energy[~silent].sum()
            delta_ratio = (
                float(10.0 * np.log10(delta_energy[~silent].sum() / total_host))
                if total_host > 0
                else float("nan")
            )
        audible = ratios[~silent]
        if audible.size == 0:
            mean_ratio = float("nan")
        elif np.isfinite(audible).any():
            mean_ratio = float(audible[np.isfinite(audible)].mean())
        else:
            mean_ratio = float("-inf")
        return HeadroomReport(
            ratios_db=ratios,
            mean_ratio_db=mean_ratio,
            delta_ratio_db=delta_ratio,
            peak_delta=peak,
            zero_energy_blocks=[int(i) for i in np.flatnonzero(silent)],
        )


def _band_spectra(
    clip: AudioClip, offset: int, block_len: int, count: int, band: Band
) -> NDArray[np.float64]:
    return dct_forward(frame_blocks(clip, offset, block_len, count))[:, band.slice]
