"""
Unit tests for the channel endpoint schemas.
"""

from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from src.endpoints.channel.presentation.schemas import ChannelSchema, RoomSchema
from src.shared.exceptions import AudioIOError


class TestChannelSchema:
    """Test suite for ChannelSchema."""

    @pytest.mark.unit
    def test_empty_section_is_identity(self) -> None:
        """Test the defaults."""
        # Act
        spec = ChannelSchema().to_domain()

        # Assert
        assert spec.impulse_response.tolist() == [1.0]
        assert spec.noise_snr_db is None

    @pytest.mark.unit
    def test_room_is_synthesized(self) -> None:
        """Test that a room section becomes a synthetic IR."""
        # Act
        spec = ChannelSchema(room=RoomSchema(rt60_s=0.3, seed=2)).to_domain()

        # Assert
        assert spec.impulse_response.size == 14400
        assert spec.impulse_response[0] == 1.0

    @pytest.mark.unit
    def test_explicit_taps_are_used(self) -> None:
        """Test the impulse_response field."""
        # Act
        spec = ChannelSchema(impulse_response=[0.5, 0.25], drift_ppm=80).to_domain()

        # Assert
        assert np.array_equal(spec.impulse_response, [0.5, 0.25])
        assert spec.drift_ppm == 80.0

    @pytest.mark.unit
    def test_two_filter_sources_are_rejected(self) -> None:
        """Test that room and taps exclude each other."""
        # Act & Assert
        with pytest.raises(ValidationError, match="at most one"):
            ChannelSchema(room={"rt60_s": 0.3}, impulse_response=[1.0])

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "fields",
        [
            {"drift_ppm": 10000},
            {"lowpass_hz": 0},
            {"impulse_response": []},
            {"room": {"rt60_s": -1}},
            {"reverb": True},
        ],
    )
    def test_invalid_sections_are_rejected(self, fields: dict) -> None:
        """Test ranges and unknown fields."""
        # Act & Assert
        with pytest.raises(ValidationError):
            ChannelSchema.model_validate(fields)

    @pytest.mark.unit
    def test_missing_ir_file_fails_at_build_time(self, tmp_path: Path) -> None:
        """Test that ir_file is read by to_domain."""
        # Arrange
        schema = ChannelSchema(ir_file=tmp_path / "absent.wav")

        # Act & Assert
        with pytest.raises(AudioIOError):
            schema.to_domain()

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("fields", "label"),
        [
            ({"name": "office"}, "office"),
            ({"room": {"rt60_s": 0.5, "direct_ratio_db": 12}}, "rt0.5_drr12_ppm0"),
            ({"ir_file": "irs/hall.wav", "drift_ppm": 50}, "hall_ppm50"),
            ({}, "flat_ppm0"),
        ],
    )
    def test_label(self, fields: dict, label: str) -> None:
        """Test result-table labels."""
        # Act & Assert
        assert ChannelSchema.model_validate(fields).label == label
