"""
Unit tests for shared validation utilities.

These tests ensure that validation utilities work correctly and are
well-tested as they're used across all endpoints.
"""

import numpy as np
import pytest

from src.shared.exceptions import ConfigurationError
from src.shared.utils.validation import (
    require_positive,
    require_vector,
    validate_not_empty,
)


class TestRequireVector:
    """Test suite for require_vector function."""

    @pytest.mark.unit
    def test_list_becomes_float_array(self) -> None:
        """Test that a list of ints is returned as float64."""
        # Act
        result = require_vector([1, 2, 3], "taps")

        # Assert
        assert result.dtype == np.float64
        assert result.tolist() == [1.0, 2.0, 3.0]

    @pytest.mark.unit
    @pytest.mark.parametrize("values", [[], [[1.0, 2.0]], 3.0])
    def test_non_vectors_are_rejected(self, values: object) -> None:
        """Test that empty, 2-D and scalar inputs are rejected."""
        # Act & Assert
        with pytest.raises(ConfigurationError, match="taps"):
            require_vector(values, "taps")  # type: ignore[arg-type]

    @pytest.mark.unit
    def test_non_finite_values_are_rejected(self) -> None:
        """Test that NaN and Inf are rejected."""
        # Act & Assert
        with pytest.raises(ConfigurationError, match="finite"):
            require_vector([1.0, np.nan], "taps")


class TestRequirePositive:
    """Test suite for require_positive function."""

    @pytest.mark.unit
    @pytest.mark.parametrize("value", [1, 0.5, np.float64(2.0), np.int32(3)])
    def test_positive_numbers_pass(self, value: object) -> None:
        """Test that positive numbers are accepted."""
        # Act & Assert
        require_positive(value, "chunk_s")

    @pytest.mark.unit
    @pytest.mark.parametrize("value", [0, -1.0, float("nan"), "1", None])
    def test_other_values_fail(self, value: object) -> None:
        """Test that zero, negatives, NaN and non-numbers are rejected."""
        # Act & Assert
        with pytest.raises(ConfigurationError, match="chunk_s must be positive"):
            require_positive(value, "chunk_s")


class TestValidateNotEmpty:
    """Test suite for validate_not_empty function."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "value,expected",
        [
            ("key", True),
            (b"key", True),
            ([0], True),
            (np.zeros(1), True),
            (0, True),
            (None, False),
            ("   ", False),
            (b"", False),
            ([], False),
            ({}, False),
            (np.zeros(0), False),
        ],
    )
    def test_various_values_return_expected_result(
        self, value: object, expected: bool
    ) -> None:
        """Test various values return expected results."""
        assert validate_not_empty(value) is expected
