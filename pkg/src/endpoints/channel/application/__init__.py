"""
Channel application layer.
"""
