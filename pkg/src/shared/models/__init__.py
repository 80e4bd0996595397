"""
Shared models module.

Signal carriers used across all endpoints.
"""

from src.shared.models.audio import PROCESSING_RATE, AudioClip, Band, BlockSpectrum

__all__ = ["AudioClip", "Band", "BlockSpectrum", "PROCESSING_RATE"]
