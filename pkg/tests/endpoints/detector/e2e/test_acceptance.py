"""
Acceptance tests for the detector endpoint.
"""

import json
import sys
from collections.abc import Callable
from pathlib import Path

import pytest

from src.endpoints.detector.main import main as detector_main
from src.main import run
from src.shared.presentation import EXIT_NOT_DETECTED, EXIT_OK

WATERMARK_FLAGS = ["--key", "owner", "--duration-s", "0.2", "--beta", "0.3"]
SCAN_FLAGS = ["--stride", "240", "--noise-window", "50", "--smooth-window", "2"]


class TestDetectorAcceptance:
    """Acceptance test suite for batch and streaming detection."""

    @pytest.mark.e2e
    def test_streaming_reports_every_insertion(
        self,
        tmp_path: Path,
        write_noise_wav: Callable[..., Path],
        capsys: pytest.CaptureFixture,
    ) -> None:
        """Test a file marked every two seconds scanned in half-second chunks."""
        # Arrange
        host = write_noise_wav(8.0)
        marked = tmp_path / "marked.wav"
        embed = ["embed", str(host), str(marked), "--start-s", "1", "--period-s", "2"]
        run([*embed, *WATERMARK_FLAGS])
        capsys.readouterr()

        # Act
        status = run(
            [
                "detect",
                str(marked),
                *WATERMARK_FLAGS,
                *SCAN_FLAGS,
                "--streaming",
                "--chunk-s",
                "0.5",
            ]
        )

        # Assert
        summary = json.loads(capsys.readouterr().out)
        peaks = [d["peak_s"] for d in summary["detections"]]
        assert status == EXIT_OK
        assert summary["mode"] == "streaming"
        for expected in (1.0, 3.0, 5.0, 7.0):
            assert any(abs(peak - expected) <= 0.01 for peak in peaks)
        document = json.loads(marked.with_suffix(".detections.json").read_text())
        assert document["detections"] == summary["detections"]

    @pytest.mark.e2e
    def test_endpoint_entry_point(
        self,
        write_noise_wav: Callable[..., Path],
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Test the endpoint's own entry point on unmarked audio."""
        # Arrange
        host = write_noise_wav(3.0)
        argv = ["detector", "detect", str(host), *WATERMARK_FLAGS, *SCAN_FLAGS]
        monkeypatch.setattr(sys, "argv", [*argv, "--threshold", "50"])

        # Act
        with pytest.raises(SystemExit) as scanned:
            detector_main()

        # Assert
        assert scanned.value.code == EXIT_NOT_DETECTED
        assert host.with_suffix(".trace.csv").exists()
