"""
Evaluation application layer.
"""
