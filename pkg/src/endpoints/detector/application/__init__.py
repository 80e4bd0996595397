"""
Detector application layer.
"""
