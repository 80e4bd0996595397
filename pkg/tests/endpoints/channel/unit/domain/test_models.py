"""
Unit tests for channel domain models.
"""

import numpy as np
import pytest

from src.endpoints.channel.domain.models import ChannelSpec, SyntheticRoom, room_grid
from src.shared.exceptions import ConfigurationError


class TestChannelSpec:
    """Test suite for ChannelSpec."""

    @pytest.mark.unit
    def test_identity_has_single_unit_tap(self) -> None:
        """Test the default channel."""
        # Act
        spec = ChannelSpec.identity()

        # Assert
        assert spec.impulse_response.tolist() == [1.0]
        assert spec.drift_ppm == 0.0
        assert spec.noise_snr_db is None

    @pytest.mark.unit
    def test_normalize_ir_gives_unit_energy(self) -> None:
        """Test impulse response normalization."""
        # Act
        spec = ChannelSpec([3.0, 4.0], normalize_ir=True)

        # Assert
        assert np.allclose(spec.impulse_response, [0.6, 0.8])
        assert spec.describe()["ir_energy"] == pytest.approx(1.0)

    @pytest.mark.unit
    def test_impulse_response_is_read_only(self) -> None:
        """Test that stored taps cannot be modified."""
        # Arrange
        spec = ChannelSpec([1.0, 0.5])

        # Act & Assert
        with pytest.raises(ValueError):
            spec.impulse_response[0] = 2.0

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"impulse_response": []},
            {"impulse_response": [1.0, float("nan")]},
            {"drift_ppm": 10000.0},
            {"drift_ppm": -20000.0},
            {"lowpass_hz": 0.0},
            {"highpass_hz": -5.0},
            {"noise_snr_db": float("inf")},
            {"impulse_response": [0.0, 0.0], "normalize_ir": True},
        ],
    )
    def test_invalid_parameters_are_rejected(self, kwargs: dict) -> None:
        """Test the constructor checks."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            ChannelSpec(**kwargs)

    @pytest.mark.unit
    def test_replace_keeps_other_fields(self) -> None:
        """Test copying with one change."""
        # Arrange
        spec = ChannelSpec([1.0, 0.2], drift_ppm=50.0, noise_snr_db=20.0)

        # Act
        changed = spec.replace(noise_seed=9)

        # Assert
        assert changed.noise_seed == 9
        assert changed.drift_ppm == 50.0
        assert np.array_equal(changed.impulse_response, spec.impulse_response)


class TestSyntheticRoom:
    """Test suite for SyntheticRoom and room_grid."""

    @pytest.mark.unit
    def test_length_defaults_to_rt60(self) -> None:
        """Test the default response length."""
        # Act & Assert
        assert SyntheticRoom(0.4).length_s == pytest.approx(0.4)

    @pytest.mark.unit
    def test_too_short_length_is_rejected(self) -> None:
        """Test length_s >= rt60_s / 2."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            SyntheticRoom(1.0, length_s=0.4)

    @pytest.mark.unit
    def test_non_positive_rt60_is_rejected(self) -> None:
        """Test the rt60 check."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            SyntheticRoom(0.0)

    @pytest.mark.unit
    def test_grid_has_twelve_distinct_rooms(self) -> None:
        """Test the evaluation grid."""
        # Act
        rooms = room_grid(seed=100)

        # Assert
        assert len(rooms) == 12
        assert len({room.label for room in rooms}) == 12
        assert [room.seed for room in rooms] == list(range(100, 112))
        assert rooms[0].label == "rt0.15_drr0"
