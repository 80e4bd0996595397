"""
Evaluation infrastructure layer.

Results directory writer.
"""
