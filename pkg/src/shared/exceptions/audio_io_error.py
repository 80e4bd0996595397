"""
Audio and artifact I/O exception.
"""

from src.shared.exceptions.validation_error import ValidationError


class AudioIOError(ValidationError):
    """
    Raised when an audio, impulse-response or config file cannot be read
    or written.

    Args:
        message: Error message describing the failure.
        path: Offending path, if known.
    """

    def __init__(self, message: str, path: str | None = None) -> None:
        """
        Initialize AudioIOError.

        Args:
            message: Error message describing the failure.
            path: Offending path, if known.
        """
        super().__init__(message)
        self.path = path
