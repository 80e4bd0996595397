"""
Results directory writer.

Writes every table of an evaluation into a staging directory that
replaces the results directory only once all files are complete.
"""

import csv
import io
from importlib import metadata
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from src.endpoints.evaluation.application.report import SweepReport
from src.endpoints.evaluation.domain.models import CellResult
from src.shared.infrastructure.audio_files import (
    PathLike,
    staged_directory,
    write_json,
    write_text,
)
from src.shared.infrastructure.logger import get_logger

logger = get_logger(__name__)

REPRODUCIBILITY_NOTE = (
    "Hosts and rooms are synthetic stand-ins; absolute ROC operating points are "
    "reproducible only as trends. Re-running with the same seed and config "
    "reproduces every table bit for bit."
)


def package_version() -> str:
    """Installed package version, or "unknown" when running from a checkout."""
    try:
        return metadata.version("eigenmark")
    except metadata.PackageNotFoundError:
        return "unknown"


def rows_to_csv(rows: Iterable[dict[str, Any]], columns: list[str]) -> str:
    """
    Render dictionaries as CSV text.

    Args:
        rows: Rows keyed by column name.
        columns: Column order (also the header).

    Returns:
        CSV content as a string.
    """
    output = io.StringIO()
    writer = csv.writer(output)
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if row[c] is None else row[c] for c in columns])
    return output.getvalue()


def write_results(
    results_dir: PathLike,
    effective_config: dict[str, Any],
    seed: int,
    results: list[CellResult],
    report: SweepReport,
) -> Path:
    """
    Write the results directory.

    Files: cells.csv, length_sweep.csv, drift_sweep.csv, histograms.csv,
    roc.json, scores.npz and manifest.json.

    Args:
        results_dir: Final directory (replaced if it exists).
        effective_config: Experiment config as run, echoed in the manifest.
        seed: Experiment seed.
        results: Cell results.
        report: Sweep report built from results.

    Returns:
        The results directory.
    """
    final = Path(results_dir)
    with staged_directory(final) as staging:
        tables = {
            "cells.csv": report.cells,
            "length_sweep.csv": report.length_table,
            "drift_sweep.csv": report.drift_table,
            "histograms.csv": report.histograms,
        }
        for name, rows in tables.items():
            columns = list(rows[0]) if rows else []
            write_text(staging / name, rows_to_csv(rows, columns))
        write_json(
            staging / "roc.json",
            {str(index): roc.to_dict() for index, roc in sorted(report.rocs.items())},
        )
        _write_scores(staging / "scores.npz", results)
        write_json(
            staging / "manifest.json",
            {
                "seed": seed,
                "package_version": package_version(),
                "config_hashes": sorted({r.config_hash for r in results}),
                "effective_config": effective_config,
                "cells": len(results),
                "far_target": report.far_target,
                "files": sorted([*tables, "roc.json", "scores.npz"]),
                "note": REPRODUCIBILITY_NOTE,
            },
        )
    logger.info(f"Wrote results for {len(results)} cell(s) to {final}")
    return final


def _write_scores(path: Path, results: list[CellResult]) -> None:
    arrays = {}
    for result in results:
        prefix = f"cell{result.index}"
        arrays[f"{prefix}_signal"] = result.signal_scores
        arrays[f"{prefix}_null_windows"] = result.null_scores
        arrays[f"{prefix}_null_points"] = result.null_points
        arrays[f"{prefix}_raw_signal_rho"] = result.raw_signal_rho
        arrays[f"{prefix}_raw_null_rho"] = result.raw_null_rho
    with path.open("wb") as handle:
        np.savez(handle, **arrays)
