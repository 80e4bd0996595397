"""
Channel infrastructure layer.
"""
