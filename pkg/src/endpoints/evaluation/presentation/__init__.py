"""
Evaluation presentation layer.

Experiment config schema and the eval subcommand.
"""
