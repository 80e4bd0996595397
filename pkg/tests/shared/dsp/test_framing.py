"""
Unit tests for block framing.
"""

import numpy as np
import pytest

from src.shared.dsp import block_count, frame_blocks
from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.models import AudioClip


class TestBlockCount:
    """Test suite for block_count."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "length,offset,expected",
        [(4800, 0, 10), (4799, 0, 9), (4800, 1, 9), (10, 20, 0)],
    )
    def test_counts_whole_blocks(self, length: int, offset: int, expected: int) -> None:
        """Test that only complete blocks are counted."""
        # Act & Assert
        assert block_count(length, 480, offset) == expected

    @pytest.mark.unit
    def test_block_len_must_be_positive(self) -> None:
        """Test that a zero block length raises."""
        # Act & Assert
        with pytest.raises(ConfigurationError):
            block_count(100, 0)


class TestFrameBlocks:
    """Test suite for frame_blocks."""

    @pytest.mark.unit
    def test_blocks_concatenate_to_source_span(self) -> None:
        """Test that the rows, concatenated, reproduce the sliced samples."""
        # Arrange
        clip = AudioClip(np.arange(100, dtype=float))

        # Act
        blocks = frame_blocks(clip, 7, 10, 3)

        # Assert
        assert blocks.shape == (3, 10)
        assert np.array_equal(blocks.reshape(-1), clip.samples[7:37])

    @pytest.mark.unit
    def test_result_is_writable_copy(self) -> None:
        """Test that modifying blocks leaves the clip intact."""
        # Arrange
        clip = AudioClip(np.zeros(20))

        # Act
        blocks = frame_blocks(clip, 0, 10, 2)
        blocks[0, 0] = 1.0

        # Assert
        assert clip.samples[0] == 0.0

    @pytest.mark.unit
    @pytest.mark.parametrize("offset,count", [(-1, 1), (95, 1), (0, 11)])
    def test_out_of_range_requests_raise(self, offset: int, count: int) -> None:
        """Test that reading past either end is a range error."""
        # Arrange
        clip = AudioClip(np.zeros(100))

        # Act & Assert
        with pytest.raises(SignalRangeError):
            frame_blocks(clip, offset, 10, count)
