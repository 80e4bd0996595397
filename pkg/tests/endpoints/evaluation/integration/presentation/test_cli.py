"""
Integration tests for the `eval` subcommand.
"""

import csv
import json
from pathlib import Path

import pytest

from src.main import run
from src.shared.presentation import EXIT_IO, EXIT_OK, EXIT_VALIDATION

TINY_EXPERIMENT = {
    "schema_version": 1,
    "seed": 11,
    "hosts": [{"kind": "white"}, {"kind": "pink"}],
    "watermarks": [
        {"key": "fixture-key", "duration_s": 0.2, "beta": 0.3},
        {"key": "fixture-key", "duration_s": 0.2, "beta": 0.3, "unmarked": True},
    ],
    "channels": [
        {"name": "flat"},
        {"impulse_response": [1.0, 0.0, 0.3], "drift_ppm": 50},
    ],
    "trials_per_cell": 3,
    "period_s": 1.0,
    "decoder": {"scan_stride": 240, "noise_window": 50, "smooth_window": 2},
    "fa_scan": {"duration_s": 0},
}


@pytest.fixture
def experiment_file(tmp_path: Path) -> Path:
    """
    Provide the tiny experiment as a JSON file.

    Returns:
        Path of the file.
    """
    path = tmp_path / "experiment.json"
    path.write_text(json.dumps(TINY_EXPERIMENT))
    return path


class TestEvalCommand:
    """Test suite for `eigenmark eval`."""

    @pytest.mark.integration
    @pytest.mark.slow
    def test_results_directory(
        self, tmp_path: Path, experiment_file: Path, capsys: pytest.CaptureFixture
    ) -> None:
        """Test the summary and the tables of a two-by-two experiment."""
        # Arrange
        results_dir = tmp_path / "results"

        # Act
        status = run(["eval", str(experiment_file), str(results_dir), "--workers", "1"])

        # Assert
        summary = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert len(summary["cells"]) == 4
        with (results_dir / "cells.csv").open() as handle:
            rows = list(csv.DictReader(handle))
        assert [row["channel"] for row in rows] == [
            "flat",
            "flat_ppm50",
            "flat",
            "flat_ppm50",
        ]
        assert [float(row["beta"]) for row in rows] == [0.3, 0.3, 0.0, 0.0]
        manifest = json.loads((results_dir / "manifest.json").read_text())
        assert manifest["seed"] == 11
        assert "fixture-key" not in json.dumps(manifest)

    @pytest.mark.integration
    @pytest.mark.slow
    def test_same_seed_same_tables(self, tmp_path: Path, experiment_file: Path) -> None:
        """Test that a rerun reproduces the cell table exactly, in a pool too."""
        # Act
        run(["eval", str(experiment_file), str(tmp_path / "a"), "--workers", "1"])
        run(["eval", str(experiment_file), str(tmp_path / "b"), "--workers", "2"])

        # Assert
        first = (tmp_path / "a" / "cells.csv").read_text()
        assert first == (tmp_path / "b" / "cells.csv").read_text()

    @pytest.mark.integration
    def test_invalid_experiment(self, tmp_path: Path) -> None:
        """Test that a schema error exits with the validation status."""
        # Arrange
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({**TINY_EXPERIMENT, "channels": []}))

        # Act
        status = run(["eval", str(path), str(tmp_path / "results")])

        # Assert
        assert status == EXIT_VALIDATION
        assert not (tmp_path / "results").exists()

    @pytest.mark.integration
    def test_crowded_period(self, tmp_path: Path) -> None:
        """Test that a domain error is reported before any trial runs."""
        # Arrange
        path = tmp_path / "crowded.json"
        path.write_text(json.dumps({**TINY_EXPERIMENT, "period_s": 0.25}))

        # Act
        status = run(["eval", str(path), str(tmp_path / "results")])

        # Assert
        assert status == EXIT_VALIDATION

    @pytest.mark.integration
    def test_missing_experiment(self, tmp_path: Path) -> None:
        """Test that a missing config file is an I/O error."""
        # Act
        status = run(["eval", str(tmp_path / "nope.json"), str(tmp_path / "results")])

        # Assert
        assert status == EXIT_IO
