"""
Watermark application layer.

Use cases for building and checking banks and for embedding marks.
"""
