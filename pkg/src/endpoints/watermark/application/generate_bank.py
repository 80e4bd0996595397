"""
GenerateBank use case.

Derives the orthonormal eigen watermarks and the sign matrix from a key.
"""

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.exceptions import ConfigurationError
from src.shared.infrastructure.logger import get_logger
from src.shared.utils import keyed_generator

logger = get_logger(__name__)


class GenerateBank:
    """
    Use case for deriving a WatermarkBank from a WatermarkConfig.

    A keyed Gaussian matrix A (D x D) is symmetrized, H = (A + A^T) / 2, and
    the N_s eigenvectors of largest |eigenvalue| become the watermarks.
    Each eigenvector is sign-canonicalized so its largest-magnitude
    component is positive. Signs are i.i.d. fair +/-1 drawn from the sign
    subkey.
    """

    RANK_TOLERANCE = 1e-10
    MAX_ATTEMPTS = 32

    def execute(self, config: WatermarkConfig) -> WatermarkBank:
        """
        Build the bank for a config.

        Args:
            config: Embedding configuration.

        Returns:
            Bank whose config_hash matches config.

        Raises:
            ConfigurationError: If N_s exceeds the band width D, or no
                full-rank matrix was found.
        """
        width = config.band.width
        if config.n_segments > width:
            raise ConfigurationError(
                f"Cannot build {config.n_segments} orthonormal watermarks "
                f"in a band of {width} bins"
            )
        key = config.key
        vectors = self._eigen_watermarks(key.vector_subkey(), width, config.n_segments)
        signs = self._signs(key.sign_subkey(), config.n_repeats, config.n_segments)
        logger.debug(
            f"Generated bank D={width} N_s={config.n_segments} N_r={config.n_repeats}"
        )
        return WatermarkBank(vectors, signs, config.config_hash)

    def _eigen_watermarks(
        self, subkey: bytes, width: int, count: int
    ) -> NDArray[np.float64]:
        for nonce in range(self.MAX_ATTEMPTS):
            rng = keyed_generator(subkey, nonce)
            matrix = rng.standard_normal((width, width))
            symmetric = (matrix + matrix.T) / 2.0
            eigenvalues, eigenvectors = linalg.eigh(symmetric)
            magnitudes = np.abs(eigenvalues)
            if magnitudes.min() <= self.RANK_TOLERANCE * magnitudes.max():
                logger.debug(f"Rank check failed for nonce {nonce}, regenerating")
                continue
            order = sorted(range(width), key=lambda k: (-magnitudes[k], k))[:count]
            chosen = eigenvectors[:, order].T.copy()
            for row in chosen:
                if row[np.argmax(np.abs(row))] < 0:
                    row *= -1.0
            return chosen
        raise ConfigurationError("No full-rank keyed matrix found; change the key")

    @staticmethod
    def _signs(subkey: bytes, repeats: int, segments: int) -> NDArray[np.int8]:
        rng = keyed_generator(subkey)
        draws = rng.integers(0, 2, size=(repeats, segments), dtype=np.int8)
        return (2 * draws - 1).astype(np.int8)
