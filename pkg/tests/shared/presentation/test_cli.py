"""
Unit tests for the shared command-line plumbing.
"""

import json

import pytest

from src.shared.presentation import EXIT_USAGE, CliParser, emit_summary


class TestCliParser:
    """Test suite for CliParser."""

    @pytest.mark.unit
    def test_usage_error_exits_with_usage_code(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that argparse errors exit with status 1, not 2."""
        # Arrange
        parser = CliParser(prog="eigenmark")
        parser.add_argument("--beta", type=float)

        # Act
        with pytest.raises(SystemExit) as exc_info:
            parser.parse_args(["--beta", "strong"])

        # Assert
        assert exc_info.value.code == EXIT_USAGE
        assert "invalid float value" in capsys.readouterr().err


class TestEmitSummary:
    """Test suite for emit_summary."""

    @pytest.mark.unit
    def test_summary_is_sorted_json_on_stdout(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that the summary is one JSON document on stdout."""
        # Act
        emit_summary({"insertions": 15, "command": "embed"})

        # Assert
        captured = capsys.readouterr()
        assert json.loads(captured.out) == {"command": "embed", "insertions": 15}
        assert captured.out.index('"command"') < captured.out.index('"insertions"')
        assert captured.err == ""
