"""
Detector endpoint.

Asynchronous watermark detection by modulated self-correlation, with
channel-adaptive noise statistics, plus the cross-correlation baseline.
"""
