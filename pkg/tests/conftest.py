"""
Pytest configuration and shared fixtures.

This file contains fixtures and configuration that are available to all tests.
"""

from collections.abc import Callable, Generator
from pathlib import Path

import numpy as np
import pytest

from src.endpoints.watermark.application.generate_bank import GenerateBank
from src.endpoints.watermark.domain.models import (
    WatermarkBank,
    WatermarkConfig,
    WatermarkKey,
)
from src.shared.infrastructure.audio_files import write_wav
from src.shared.infrastructure.logger import get_logger
from src.shared.infrastructure.settings import get_settings
from src.shared.models import PROCESSING_RATE, AudioClip, Band


@pytest.fixture
def logger() -> Generator:
    """
    Provide a logger instance for tests.

    Yields:
        Logger instance configured for testing.
    """
    logger_instance = get_logger("test", level=10)  # DEBUG level
    yield logger_instance


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Generator:
    """
    Isolate every test from EIGENMARK_* variables of the calling shell.

    Yields:
        None; the settings cache is cleared before and after the test.
    """
    for name in ("EIGENMARK_CONFIG", "EIGENMARK_LOG_LEVEL", "EIGENMARK_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Provide a seeded random generator.

    Returns:
        numpy Generator with a fixed seed.
    """
    return np.random.default_rng(1234)


@pytest.fixture
def white_clip(rng: np.random.Generator) -> AudioClip:
    """
    Provide three seconds of white noise at 48 kHz.

    Returns:
        AudioClip with RMS 0.1.
    """
    return AudioClip(0.1 * rng.standard_normal(3 * PROCESSING_RATE))


@pytest.fixture
def small_config() -> WatermarkConfig:
    """
    Provide a short watermark (2 segments x 10 repeats of 480 samples).

    Returns:
        WatermarkConfig lasting 0.2 s.
    """
    return WatermarkConfig(
        WatermarkKey.from_text("fixture-key"),
        block_len=480,
        n_segments=2,
        n_repeats=10,
        band=Band(20, 160),
        beta=0.3,
    )


@pytest.fixture
def small_bank(small_config: WatermarkConfig) -> WatermarkBank:
    """
    Provide the bank of small_config.

    Returns:
        Generated WatermarkBank.
    """
    return GenerateBank().execute(small_config)


@pytest.fixture
def default_config() -> WatermarkConfig:
    """
    Provide the default one-second watermark.

    Returns:
        WatermarkConfig with default block length, band and strength.
    """
    return WatermarkConfig.for_duration(WatermarkKey.from_text("default-key"), 1.0)


@pytest.fixture
def write_noise_wav(tmp_path: Path, rng: np.random.Generator) -> Callable[..., Path]:
    """
    Provide a factory writing white-noise WAV files.

    Returns:
        Callable (seconds, name) -> path of a 24-bit 48 kHz file.
    """

    def _write(seconds: float, name: str = "host.wav") -> Path:
        samples = 0.1 * rng.standard_normal(int(round(seconds * PROCESSING_RATE)))
        return write_wav(tmp_path / name, AudioClip(samples), 24)

    return _write
