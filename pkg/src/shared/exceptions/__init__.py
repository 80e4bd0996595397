"""
Shared exceptions module.

Common exception classes used across all endpoints.
"""

from src.shared.exceptions.audio_io_error import AudioIOError
from src.shared.exceptions.validation_error import (
    ConfigurationError,
    SignalRangeError,
    ValidationError,
)

__all__ = [
    "AudioIOError",
    "ConfigurationError",
    "SignalRangeError",
    "ValidationError",
]
