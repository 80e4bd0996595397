"""
Subcommand of the evaluation endpoint: `eval`.
"""

import argparse
from pathlib import Path
from typing import Any

from src.endpoints.evaluation.application.detection_trials import run_detection_trials
from src.endpoints.evaluation.application.report import DEFAULT_FAR_TARGET, sweep_report
from src.endpoints.evaluation.infrastructure.results_writer import write_results
from src.endpoints.evaluation.presentation.schemas import ExperimentSchema
from src.shared.infrastructure.audio_files import read_json
from src.shared.presentation import EXIT_OK, emit_summary


def handle_eval(args: argparse.Namespace) -> int:
    """
    Run an experiment and write its results directory.

    The experiment is fully validated before the first trial runs.

    Args:
        args: Parsed arguments.

    Returns:
        Exit status.
    """
    schema = ExperimentSchema.model_validate(read_json(args.experiment))
    experiment = schema.to_domain()
    results = run_detection_trials(experiment, args.workers)
    report = sweep_report(experiment, results, args.far_target)
    write_results(args.results_dir, schema.echo(), experiment.seed, results, report)

    emit_summary(
        {
            "command": "eval",
            "experiment": str(args.experiment),
            "results_dir": str(args.results_dir),
            "cells": report.cells,
            "far_target": report.far_target,
        }
    )
    return EXIT_OK


def register(subparsers: Any) -> None:
    """
    Register `eval`.

    Args:
        subparsers: Object returned by add_subparsers on the root parser.
    """
    evaluate = subparsers.add_parser("eval", help="Run a robustness experiment")
    evaluate.add_argument("experiment", type=Path, help="Experiment config JSON")
    evaluate.add_argument("results_dir", type=Path, help="Results directory to write")
    evaluate.add_argument(
        "--workers", type=int, help="Worker processes (default EIGENMARK_WORKERS)"
    )
    evaluate.add_argument(
        "--far-target",
        type=float,
        default=DEFAULT_FAR_TARGET,
        help="FAR at which TPR is tabulated",
    )
    evaluate.set_defaults(handler=handle_eval)
