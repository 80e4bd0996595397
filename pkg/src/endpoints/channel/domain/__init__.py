"""
Channel domain layer.
"""
