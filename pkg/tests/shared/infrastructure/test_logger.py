"""
Unit tests for shared logging infrastructure.

These tests ensure that logging utilities work correctly and provide
consistent logging behavior across all endpoints.
"""

import logging
import sys
from io import StringIO

import pytest

from src.shared.infrastructure.logger import get_logger, set_level
from src.shared.infrastructure.settings import get_settings


class TestGetLogger:
    """Test suite for get_logger function."""

    @pytest.mark.unit
    def test_get_logger_returns_logger_instance(self) -> None:
        """Test that get_logger returns a logger instance."""
        # Act
        logger = get_logger(__name__)

        # Assert
        assert isinstance(logger, logging.Logger)

    @pytest.mark.unit
    def test_logger_has_correct_name(self) -> None:
        """Test that logger has the correct name."""
        # Arrange
        name = "test_module"

        # Act
        logger = get_logger(name)

        # Assert
        assert logger.name == name

    @pytest.mark.unit
    def test_logger_logs_info_message(self) -> None:
        """Test that logger can log info messages."""
        # Arrange
        logger = get_logger("test_info_message")
        test_output = StringIO()
        handler = logging.StreamHandler(test_output)
        handler.setFormatter(logging.Formatter("%(levelname)s - %(message)s"))
        logger.addHandler(handler)

        # Act
        logger.info("Embedded 3 watermark(s)")

        # Assert
        assert "INFO - Embedded 3 watermark(s)" in test_output.getvalue()
        logger.removeHandler(handler)

    @pytest.mark.unit
    def test_get_logger_with_custom_level(self) -> None:
        """Test that get_logger accepts custom log level."""
        # Act
        logger = get_logger("test_custom_level", level=logging.DEBUG)

        # Assert
        assert logger.level == logging.DEBUG

    @pytest.mark.unit
    def test_get_logger_defaults_to_info_level(self) -> None:
        """Test that get_logger defaults to INFO level."""
        # Act
        logger = get_logger("test_default_level")

        # Assert
        assert logger.level == logging.INFO

    @pytest.mark.unit
    def test_get_logger_reads_level_from_environment(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test that EIGENMARK_LOG_LEVEL sets the default level."""
        # Arrange
        monkeypatch.setenv("EIGENMARK_LOG_LEVEL", "warning")
        get_settings.cache_clear()

        # Act
        logger = get_logger("test_env_level")

        # Assert
        assert logger.level == logging.WARNING

    @pytest.mark.unit
    def test_handler_writes_to_stderr(self) -> None:
        """Test that records never go to stdout."""
        # Act
        logger = get_logger("test_stderr_handler")

        # Assert
        streams = [
            h.stream for h in logger.handlers if isinstance(h, logging.StreamHandler)
        ]
        assert streams == [sys.stderr]

    @pytest.mark.unit
    def test_multiple_calls_return_same_logger(self) -> None:
        """Test that multiple calls with same name return same logger."""
        # Act
        logger1 = get_logger("test_module")
        logger2 = get_logger("test_module")

        # Assert
        assert logger1 is logger2
        assert len(logger1.handlers) == 1


class TestSetLevel:
    """Test suite for set_level function."""

    @pytest.mark.unit
    def test_set_level_changes_package_loggers(self) -> None:
        """Test that set_level lowers every src.* logger."""
        # Arrange
        logger = get_logger("src.tests.set_level_target")

        # Act
        set_level(logging.DEBUG)

        # Assert
        assert logger.level == logging.DEBUG
        set_level(logging.INFO)

    @pytest.mark.unit
    def test_set_level_leaves_foreign_loggers(self) -> None:
        """Test that loggers outside the package keep their level."""
        # Arrange
        foreign = get_logger("foreign_logger", level=logging.ERROR)

        # Act
        set_level(logging.DEBUG)

        # Assert
        assert foreign.level == logging.ERROR
        set_level(logging.INFO)
