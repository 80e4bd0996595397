"""
Acceptance tests for the evaluation endpoint.
"""

import csv
import json
import sys
from pathlib import Path

import pytest

from src.endpoints.evaluation.main import main as evaluation_main
from src.shared.presentation import EXIT_OK

ROOM_SWEEP = {
    "schema_version": 1,
    "seed": 4,
    "hosts": [{"kind": "chords"}],
    "watermarks": [{"key": "owner", "duration_s": 0.2, "beta": 0.3}],
    "room_grid": True,
    "drift_ppm": [0],
    "trials_per_cell": 2,
    "period_s": 1.0,
    "decoder": {"scan_stride": 240, "noise_window": 50, "smooth_window": 2},
    "fa_scan": {"duration_s": 0},
}


class TestEvaluationAcceptance:
    """Acceptance test suite for robustness sweeps."""

    @pytest.mark.e2e
    @pytest.mark.slow
    def test_room_grid_sweep(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test a sweep over the twelve synthetic rooms from the endpoint main."""
        # Arrange
        experiment = tmp_path / "rooms.json"
        experiment.write_text(json.dumps(ROOM_SWEEP))
        results = tmp_path / "results"
        monkeypatch.setattr(
            sys,
            "argv",
            ["evaluation", "eval", str(experiment), str(results), "--workers", "2"],
        )

        # Act
        with pytest.raises(SystemExit) as finished:
            evaluation_main()

        # Assert
        assert finished.value.code == EXIT_OK
        with (results / "cells.csv").open() as handle:
            rows = list(csv.DictReader(handle))
        assert len(rows) == 12
        assert rows[0]["channel"] == "rt0.15_drr0_ppm0"
        assert all(0.0 <= float(row["auc"]) <= 1.0 for row in rows)
        roc = json.loads((results / "roc.json").read_text())
        assert sorted(roc, key=int) == [str(n) for n in range(12)]
        with (results / "length_sweep.csv").open() as handle:
            assert [row["cells"] for row in csv.DictReader(handle)] == ["12"]
