"""
Unit tests for the batch scan.
"""

import numpy as np
import pytest

from src.endpoints.detector.application.scan import raw_scores, scan
from src.endpoints.detector.domain.models import DecoderParams, PairSubset
from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.models import AudioClip

MARK_OFFSET = 48000


class TestScan:
    """Test suite for scan."""

    @pytest.mark.unit
    def test_marked_clip_is_detected_at_its_offset(
        self,
        marked_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test that a run peaks within one block of the insertion."""
        # Act
        trace = scan(marked_clip, small_config, small_bank, scan_params)

        # Assert
        peaks = [d.peak_sample for d in trace.detections()]
        assert any(abs(p - MARK_OFFSET) <= 480 for p in peaks)

    @pytest.mark.unit
    def test_trace_fields_are_consistent(
        self,
        marked_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test times, gamma and decisions of a full trace."""
        # Act
        trace = scan(marked_clip, small_config, small_bank, scan_params)

        # Assert
        assert len(trace) == 561
        assert np.array_equal(trace.times, np.arange(561) * 240)
        assert np.allclose(trace.gamma, 3.0 * trace.sigma0)
        assert np.array_equal(trace.decisions, trace.rho_bar >= trace.gamma)

    @pytest.mark.unit
    def test_unmarked_clip_has_few_positive_decisions(
        self,
        white_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test the false-positive rate on white noise."""
        # Act
        trace = scan(white_clip, small_config, small_bank, scan_params)

        # Assert
        assert trace.decisions.mean() < 0.05

    @pytest.mark.unit
    def test_raw_scores_cover_every_stride(
        self,
        white_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test the raw score grid."""
        # Act
        times, rho = raw_scores(white_clip, small_config, small_bank, scan_params)

        # Assert
        assert times.size == rho.size == 561
        assert times[-1] == 560 * 240

    @pytest.mark.unit
    def test_short_clip_is_rejected(
        self,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test that noise_window + 1 points are required."""
        # Arrange
        clip = AudioClip(np.ones(scan_params.min_samples(small_config) - 1))

        # Act & Assert
        with pytest.raises(SignalRangeError, match="clip too short"):
            scan(clip, small_config, small_bank, scan_params)

    @pytest.mark.unit
    def test_foreign_bank_is_rejected(
        self,
        white_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test the bank binding."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            scan(white_clip, small_config.replace(beta=0.5), small_bank, scan_params)

    @pytest.mark.unit
    def test_invalid_pair_subset_is_rejected(
        self,
        white_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test segment validation."""
        # Arrange
        params = scan_params.replace(pair_subset=PairSubset(segments=[5]))

        # Act & Assert
        with pytest.raises(ConfigurationError):
            scan(white_clip, small_config, small_bank, params)

    @pytest.mark.unit
    def test_segment_subset_still_detects(
        self,
        marked_clip: AudioClip,
        small_config: WatermarkConfig,
        small_bank: WatermarkBank,
        scan_params: DecoderParams,
    ) -> None:
        """Test scoring with a single segment."""
        # Arrange
        params = scan_params.replace(pair_subset=PairSubset(segments=[0]))

        # Act
        trace = scan(marked_clip, small_config, small_bank, params)

        # Assert
        peak = int(np.argmax(trace.rho))
        assert trace.times[peak] == MARK_OFFSET
