"""
Detector domain layer.
"""
