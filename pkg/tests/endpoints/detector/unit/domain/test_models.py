"""
Unit tests for detector domain models.
"""

import numpy as np
import pytest

from src.endpoints.detector.domain.models import (
    DecoderParams,
    Detection,
    HostStatistics,
    PairSubset,
    ScoreTrace,
    SignatureSummary,
)
from src.endpoints.watermark.domain.models import WatermarkConfig
from src.shared.exceptions import ConfigurationError


def _trace(rho_bar: list[float], sigma: float = 1.0) -> ScoreTrace:
    count = len(rho_bar)
    return ScoreTrace(
        np.arange(count) * 240,
        rho_bar,
        np.zeros(count),
        np.full(count, sigma),
        rho_bar,
    )


class TestDecoderParams:
    """Test suite for DecoderParams."""

    @pytest.mark.unit
    def test_defaults(self) -> None:
        """Test the 5 ms stride, 2 s noise window and 3 sigma threshold."""
        # Act
        params = DecoderParams()

        # Assert
        assert params.scan_stride == 240
        assert params.noise_window == 400
        assert params.smooth_window == 2
        assert params.threshold_multiplier == 3.0

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"scan_stride": 0},
            {"noise_window": 9},
            {"smooth_window": 0},
            {"threshold_multiplier": 0.0},
        ],
    )
    def test_out_of_range_values_are_rejected(self, kwargs: dict) -> None:
        """Test the parameter ranges."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            DecoderParams(**kwargs)

    @pytest.mark.unit
    def test_min_samples_covers_noise_window(
        self, small_config: WatermarkConfig
    ) -> None:
        """Test the shortest scannable clip."""
        # Arrange
        params = DecoderParams(scan_stride=240, noise_window=50)

        # Act & Assert
        assert params.min_samples(small_config) == 9600 + 50 * 240


class TestPairSubset:
    """Test suite for PairSubset."""

    @pytest.mark.unit
    def test_defaults_take_every_pair(self, small_config: WatermarkConfig) -> None:
        """Test the unrestricted subset."""
        # Act
        subset = PairSubset()

        # Assert
        assert subset.segment_indices(small_config) == (0, 1)
        assert subset.lag_limit(small_config) == 9

    @pytest.mark.unit
    def test_segments_are_sorted_and_deduplicated(self) -> None:
        """Test segment normalization."""
        # Act & Assert
        assert PairSubset(segments=[1, 0, 1]).segments == (0, 1)

    @pytest.mark.unit
    def test_out_of_range_segment_is_rejected(
        self, small_config: WatermarkConfig
    ) -> None:
        """Test validate_for."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            PairSubset(segments=[2]).validate_for(small_config)

    @pytest.mark.unit
    def test_lag_is_capped_by_repeats(self, small_config: WatermarkConfig) -> None:
        """Test that max_lag never exceeds N_r - 1."""
        # Act & Assert
        assert PairSubset(max_lag=100).lag_limit(small_config) == 9


class TestScoreTrace:
    """Test suite for ScoreTrace."""

    @pytest.mark.unit
    def test_decision_is_inclusive_at_threshold(self) -> None:
        """Test epsilon = 1 exactly when rho_bar >= gamma."""
        # Act
        trace = _trace([2.9, 3.0, 3.1])

        # Assert
        assert trace.gamma.tolist() == [3.0, 3.0, 3.0]
        assert trace.decisions.tolist() == [0, 1, 1]

    @pytest.mark.unit
    def test_runs_become_detections_with_first_peak(self) -> None:
        """Test run boundaries and tie-breaking."""
        # Arrange
        trace = _trace([0.0, 4.0, 5.0, 5.0, 0.0, 0.0, 3.5])

        # Act
        detections = trace.detections()

        # Assert
        assert len(detections) == 2
        first, second = detections
        assert (first.start_sample, first.end_sample) == (240, 720)
        assert first.peak_sample == 480
        assert first.peak_rho_bar == 5.0
        assert (second.start_sample, second.end_sample, second.peak_sample) == (
            1440,
            1440,
            1440,
        )

    @pytest.mark.unit
    def test_concatenate_joins_fields(self) -> None:
        """Test joining partial traces."""
        # Act
        joined = ScoreTrace.concatenate([_trace([1.0, 2.0]), _trace([4.0])])

        # Assert
        assert len(joined) == 3
        assert joined.rho_bar.tolist() == [1.0, 2.0, 4.0]

    @pytest.mark.unit
    def test_concatenate_of_nothing_is_empty(self) -> None:
        """Test the empty join."""
        # Act & Assert
        assert len(ScoreTrace.concatenate([])) == 0

    @pytest.mark.unit
    def test_fields_must_share_shape(self) -> None:
        """Test the constructor check."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            ScoreTrace([0, 240], [1.0], [0.0], [1.0], [1.0])


class TestDetection:
    """Test suite for Detection."""

    @pytest.mark.unit
    def test_to_dict_converts_to_seconds(self) -> None:
        """Test the JSON form."""
        # Act
        document = Detection(48000, 49000, 48480, 7.5).to_dict()

        # Assert
        assert document["start_s"] == 1.0
        assert document["peak_s"] == pytest.approx(1.01)
        assert document["peak_rho_bar"] == 7.5


class TestSignatureAndHostModels:
    """Test suite for SignatureSummary and HostStatistics."""

    @pytest.mark.unit
    def test_separation_in_null_deviations(self) -> None:
        """Test the separation ratio."""
        # Act & Assert
        assert SignatureSummary(0.0, 2.0, 9.0).separation == 4.5
        assert SignatureSummary(0.0, 0.0, 1.0).separation == float("inf")

    @pytest.mark.unit
    def test_scalar_ratio_broadcasts(self, small_config: WatermarkConfig) -> None:
        """Test ratios_for."""
        # Act
        ratios = HostStatistics(0.5).ratios_for(small_config)

        # Assert
        assert ratios.shape == (10, 2)
        assert np.all(ratios == 0.5)

    @pytest.mark.unit
    def test_negative_ratio_is_rejected(self) -> None:
        """Test the ratio check."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            HostStatistics([-1.0])

    @pytest.mark.unit
    def test_ill_shaped_ratios_are_rejected(
        self, small_config: WatermarkConfig
    ) -> None:
        """Test broadcasting errors."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            HostStatistics(np.ones(3)).ratios_for(small_config)
