"""
Regression tests for the watermark endpoint.

Pin properties that earlier versions broke or that other components
silently depend on.
"""

import numpy as np
import pytest

from src.endpoints.watermark.application.generate_bank import GenerateBank
from src.endpoints.watermark.domain.models import WatermarkConfig, WatermarkKey
from src.shared.models import Band


class TestWatermarkRegression:
    """Regression tests for bank generation and config hashing."""

    @pytest.mark.regression
    @pytest.mark.slow
    def test_banks_are_orthonormal_for_a_hundred_keys(self) -> None:
        """Test max |<w_i, w_j> - delta_ij| < 1e-9 across keys."""
        # Arrange
        configs = [
            WatermarkConfig(WatermarkKey.from_text(f"key-{index}"), n_segments=4)
            for index in range(100)
        ]

        # Act
        deviations = []
        for config in configs:
            vectors = GenerateBank().execute(config).vectors
            deviations.append(np.max(np.abs(vectors @ vectors.T - np.eye(4))))

        # Assert
        assert max(deviations) < 1e-9

    @pytest.mark.regression
    def test_key_text_is_utf8_encoded(self) -> None:
        """Test that non-ASCII passphrases hash by their UTF-8 bytes."""
        # Act
        key = WatermarkKey.from_text("clé")

        # Assert
        assert key.key_bytes == "clé".encode("utf-8")

    @pytest.mark.regression
    def test_config_hash_distinguishes_close_betas(self) -> None:
        """Test that the hash uses the exact repr of beta."""
        # Arrange
        key = WatermarkKey.from_text("k")

        # Act
        first = WatermarkConfig(key, beta=0.1).config_hash
        second = WatermarkConfig(key, beta=0.1 + 1e-12).config_hash

        # Assert
        assert first != second

    @pytest.mark.regression
    def test_narrow_band_bank_has_requested_width(self) -> None:
        """Test a bank in a five-bin band."""
        # Arrange
        config = WatermarkConfig(
            WatermarkKey.from_text("k"), band=Band(30, 34), n_segments=5
        )

        # Act
        bank = GenerateBank().execute(config)

        # Assert
        assert bank.vectors.shape == (5, 5)
        assert np.allclose(bank.vectors @ bank.vectors.T, np.eye(5), atol=1e-9)
