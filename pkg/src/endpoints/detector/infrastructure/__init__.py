"""
Detector infrastructure layer.

Trace CSV and detection JSON exports.
"""
