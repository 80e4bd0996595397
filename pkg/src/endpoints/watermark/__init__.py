"""
Watermark endpoint.

Keyed eigen-watermark bank generation and the bi-layer sign-modulated
encoder, plus the legacy spread-spectrum embedding used as a baseline.
"""
