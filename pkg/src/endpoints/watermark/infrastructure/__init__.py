"""
Watermark infrastructure layer.

Persistence of watermark banks.
"""
