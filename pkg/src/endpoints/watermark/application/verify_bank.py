"""
VerifyBank use case.

Integrity diagnostics for banks, and coherence between banks embedded
side by side.
"""

import numpy as np

from src.endpoints.watermark.domain.models import (
    BankDiagnostics,
    WatermarkBank,
    WatermarkConfig,
)
from src.shared.exceptions import ConfigurationError
from src.shared.infrastructure.logger import get_logger

logger = get_logger(__name__)


class VerifyBank:
    """
    Use case for checking a bank against a config. Reports only; never
    raises on a faulty bank.
    """

    def execute(self, bank: WatermarkBank, config: WatermarkConfig) -> BankDiagnostics:
        """
        Measure orthonormality, norms, sign validity and the hash binding.

        Args:
            bank: Bank to check.
            config: Config the bank should belong to.

        Returns:
            BankDiagnostics report.
        """
        gram = bank.vectors @ bank.vectors.T
        deviation = float(np.max(np.abs(gram - np.eye(bank.n_segments))))
        norms = np.linalg.norm(bank.vectors, axis=1)
        report = BankDiagnostics(
            max_orthonormality_deviation=deviation,
            norm_deviations=[float(abs(norm - 1.0)) for norm in norms],
            hash_matches=bank.config_hash == config.config_hash,
            signs_valid=bool(np.all(np.isin(bank.signs, (-1, 1)))),
            shape_matches=(
                bank.n_segments == config.n_segments
                and bank.n_repeats == config.n_repeats
                and bank.band_width == config.band.width
            ),
        )
        if not report.healthy:
            logger.warning(f"Bank failed verification: {report.to_dict()}")
        return report


def cross_bank_coherence(first: WatermarkBank, second: WatermarkBank) -> float:
    """
    Largest |<w_a, w_b>| between the vectors of two banks.

    Measures how far simultaneously embedded layers are from mutual
    orthogonality.

    Args:
        first: First bank.
        second: Second bank, same band width.

    Returns:
        Maximum absolute cross inner product.

    Raises:
        ConfigurationError: If the band widths differ.
    """
    if first.band_width != second.band_width:
        raise ConfigurationError(
            "Banks live in different bands "
            f"(D={first.band_width} vs {second.band_width})"
        )
    return float(np.max(np.abs(first.vectors @ second.vectors.T)))
