"""
Evaluation domain layer.
"""
