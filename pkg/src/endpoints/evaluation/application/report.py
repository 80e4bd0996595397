"""
Sweep reports: plot-ready tables keyed by cell.
"""

from collections import defaultdict
from typing import Any, Optional

import numpy as np

from src.endpoints.evaluation.application.roc import build_roc
from src.endpoints.evaluation.domain.models import CellResult, Experiment, RocCurve

DEFAULT_FAR_TARGET = 1e-2
DEFAULT_BINS = 50


class SweepReport:
    """
    Tables of an evaluated experiment.

    Args:
        cells: One row per cell.
        length_table: Rows aggregated by watermark duration.
        drift_table: Rows aggregated by clock drift.
        histograms: Raw score histograms under both hypotheses.
        rocs: ROC curve of every cell, by cell index.
        far_target: FAR at which TPR is reported.
    """

    def __init__(
        self,
        cells: list[dict[str, Any]],
        length_table: list[dict[str, Any]],
        drift_table: list[dict[str, Any]],
        histograms: list[dict[str, Any]],
        rocs: dict[int, RocCurve],
        far_target: float,
    ) -> None:
        """Initialize SweepReport."""
        self.cells = cells
        self.length_table = length_table
        self.drift_table = drift_table
        self.histograms = histograms
        self.rocs = rocs
        self.far_target = far_target


def score_histograms(
    results: list[CellResult], bins: int = DEFAULT_BINS
) -> list[dict[str, Any]]:
    """
    Histograms of raw scores at insertion positions, signal and null, on
    shared bin edges per cell.

    Returns:
        Rows (cell, hypothesis, bin_low, bin_high, count).
    """
    rows = []
    for result in results:
        pooled = np.concatenate([result.raw_signal_rho, result.raw_null_rho])
        edges = np.histogram_bin_edges(pooled, bins=bins)
        hypotheses = (("signal", result.raw_signal_rho), ("null", result.raw_null_rho))
        for hypothesis, values in hypotheses:
            counts, _ = np.histogram(values, bins=edges)
            for low, high, count in zip(edges[:-1], edges[1:], counts):
                rows.append(
                    {
                        "cell": result.index,
                        "hypothesis": hypothesis,
                        "bin_low": float(low),
                        "bin_high": float(high),
                        "count": int(count),
                    }
                )
    return rows


def sweep_report(
    experiment: Experiment,
    results: list[CellResult],
    far_target: float = DEFAULT_FAR_TARGET,
    bins: int = DEFAULT_BINS,
) -> SweepReport:
    """
    Summarize detection trials by cell, by watermark length and by drift.

    ROC curves pit each cell's per-insertion window maxima against every
    point of its null scan.

    Args:
        experiment: The evaluated experiment.
        results: Its cell results.
        far_target: FAR at which TPR is tabulated.
        bins: Histogram bins per cell.

    Returns:
        SweepReport.
    """
    rocs = {r.index: build_roc(r.signal_scores, r.null_points) for r in results}
    cells = []
    for result in results:
        roc = rocs[result.index]
        cells.append(
            {
                "cell": result.index,
                "config": result.config_label,
                "channel": result.channel_label,
                "duration_s": result.duration_s,
                "drift_ppm": result.drift_ppm,
                "beta": result.beta,
                "trials": experiment.trials_per_cell,
                "tpr_at_gamma": result.tpr,
                "window_far_at_gamma": result.window_far,
                "point_far_at_gamma": result.null_point_far,
                "mean_gamma": result.mean_gamma,
                "null_heavy_tail": result.null_heavy_tail,
                "auc": roc.auc,
                "tpr_at_far": roc.tpr_at_far(far_target),
                "separation": result.separation,
                "config_hash": result.config_hash,
            }
        )

    by_length: dict[float, list[dict[str, Any]]] = defaultdict(list)
    by_drift: dict[float, list[dict[str, Any]]] = defaultdict(list)
    for row in cells:
        if row["beta"] > 0:
            by_length[row["duration_s"]].append(row)
            by_drift[row["drift_ppm"]].append(row)

    length_table = [
        {
            "duration_s": duration,
            "cells": len(rows),
            "mean_auc": float(np.mean([r["auc"] for r in rows])),
            "min_auc": float(np.min([r["auc"] for r in rows])),
            "mean_tpr_at_far": float(np.mean([r["tpr_at_far"] for r in rows])),
        }
        for duration, rows in sorted(by_length.items())
    ]

    drift_means = {
        drift: float(np.mean([r["tpr_at_far"] for r in rows]))
        for drift, rows in by_drift.items()
    }
    reference: Optional[float] = drift_means.get(0.0)
    drift_table = [
        {
            "drift_ppm": drift,
            "cells": len(by_drift[drift]),
            "mean_tpr_at_far": mean,
            "relative_degradation": (
                None if not reference else float((reference - mean) / reference)
            ),
        }
        for drift, mean in sorted(drift_means.items())
    ]
    histograms = score_histograms(results, bins)
    return SweepReport(
        cells, length_table, drift_table, histograms, rocs, far_target
    )
