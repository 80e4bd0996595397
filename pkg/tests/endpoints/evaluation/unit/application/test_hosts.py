"""
Unit tests for experiment host rendering.
"""

from pathlib import Path

import numpy as np
import pytest

from src.endpoints.evaluation.application.hosts import assemble_host, render_host
from src.endpoints.evaluation.domain.models import HostSource
from src.shared.exceptions import SignalRangeError
from src.shared.infrastructure.audio_files import read_wav, write_wav
from src.shared.models import PROCESSING_RATE, AudioClip
from src.shared.utils import seeded_generator


class TestRenderHost:
    """Test suite for render_host."""

    @pytest.mark.unit
    @pytest.mark.parametrize("kind", ["white", "pink", "chords"])
    def test_synthetic_length_and_level(self, kind: str) -> None:
        """Test that synthetic hosts have the requested length and RMS."""
        # Arrange
        source = HostSource(kind, level_rms=0.05)

        # Act
        clip = render_host(source, 30000, seeded_generator(0, kind))

        # Assert
        assert len(clip) == 30000
        assert clip.sample_rate == PROCESSING_RATE
        assert np.sqrt(np.mean(clip.samples**2)) == pytest.approx(0.05)

    @pytest.mark.unit
    def test_same_generator_state_same_host(self) -> None:
        """Test that rendering is a function of the generator."""
        # Arrange
        source = HostSource("chords")

        # Act
        first = render_host(source, 24000, seeded_generator(5, "host"))
        second = render_host(source, 24000, seeded_generator(5, "host"))

        # Assert
        np.testing.assert_array_equal(first.samples, second.samples)

    @pytest.mark.unit
    def test_zero_length(self) -> None:
        """Test an empty request."""
        # Act
        clip = render_host(HostSource("white"), 0, seeded_generator(0))

        # Assert
        assert len(clip) == 0

    @pytest.mark.unit
    def test_pink_noise_tilts_down(self) -> None:
        """Test that pink noise carries more power per bin at low frequencies."""
        # Arrange
        clip = render_host(HostSource("pink"), PROCESSING_RATE, seeded_generator(1))
        power = np.abs(np.fft.rfft(clip.samples)) ** 2

        # Act
        low = power[100:200].mean()
        high = power[10000:20000].mean()

        # Assert
        assert low > 10.0 * high

    @pytest.mark.unit
    def test_file_host_is_a_contiguous_excerpt(
        self, tmp_path: Path, rng: np.random.Generator
    ) -> None:
        """Test that a long enough file is cut, never repeated."""
        # Arrange
        music = AudioClip(0.1 * rng.standard_normal(5000))
        path = write_wav(tmp_path / "music.wav", music, 24)
        stored = read_wav(path).samples

        # Act
        clip = render_host(HostSource("file", path), 2500, seeded_generator(2))

        # Assert
        assert len(clip) == 2500
        start = int(np.flatnonzero(stored == clip.samples[0])[0])
        assert start + 2500 <= stored.size
        np.testing.assert_array_equal(clip.samples, stored[start : start + 2500])

    @pytest.mark.unit
    def test_whole_file_when_lengths_match(
        self, tmp_path: Path, rng: np.random.Generator
    ) -> None:
        """Test a file exactly as long as the request."""
        # Arrange
        exact = AudioClip(rng.uniform(-0.5, 0.5, 800))
        path = write_wav(tmp_path / "exact.wav", exact, 24)

        # Act
        clip = render_host(HostSource("file", path), 800, seeded_generator(4))

        # Assert
        np.testing.assert_array_equal(clip.samples, read_wav(path).samples)

    @pytest.mark.unit
    def test_short_file_is_rejected(
        self, tmp_path: Path, rng: np.random.Generator
    ) -> None:
        """Test that a file shorter than the trial raises instead of looping."""
        # Arrange
        short = AudioClip(0.1 * rng.standard_normal(1000))
        path = write_wav(tmp_path / "short.wav", short, 24)

        # Act & Assert
        with pytest.raises(SignalRangeError, match="a trial needs 2500"):
            render_host(HostSource("file", path), 2500, seeded_generator(2))

    @pytest.mark.unit
    def test_short_file_in_a_corpus_is_rejected(
        self, tmp_path: Path, rng: np.random.Generator
    ) -> None:
        """Test that assembling trial segments from a short file raises."""
        # Arrange
        path = write_wav(
            tmp_path / "short.wav", AudioClip(0.1 * rng.standard_normal(3000)), 24
        )
        sources = [HostSource("white"), HostSource("file", path)]

        # Act & Assert
        with pytest.raises(SignalRangeError, match="short.wav"):
            assemble_host(sources, 1000, 4000, 1000 + 3 * 4000, seeded_generator(0))


class TestAssembleHost:
    """Test suite for assemble_host."""

    @pytest.mark.unit
    @pytest.mark.parametrize("total", [21600, 10000, 21600 + 3 * 48000, 21600 + 50000])
    def test_exact_length(self, total: int) -> None:
        """Test that the lead-in and segments fill exactly total samples."""
        # Arrange
        sources = [HostSource("white"), HostSource("pink")]

        # Act
        clip = assemble_host(sources, 21600, 48000, total, seeded_generator(0))

        # Assert
        assert len(clip) == total

    @pytest.mark.unit
    def test_segments_rotate_through_sources(self) -> None:
        """Test that segment levels follow the corpus order."""
        # Arrange
        sources = [
            HostSource("white", level_rms=0.1),
            HostSource("white", level_rms=0.4),
        ]

        # Act
        clip = assemble_host(sources, 1000, 4000, 1000 + 3 * 4000, seeded_generator(0))

        # Assert
        levels = [
            np.sqrt(np.mean(clip.samples[1000 + 4000 * n : 5000 + 4000 * n] ** 2))
            for n in range(3)
        ]
        assert levels == pytest.approx([0.1, 0.4, 0.1])
