"""
Shared validation exception classes.

Common exception classes used across all endpoints for validation errors.
"""


class ValidationError(Exception):
    """
    Exception raised when validation fails.

    This is the base of every error the library raises on purpose. It
    provides a clear error message to help identify which rule was violated.

    Args:
        message: Error message describing the validation failure.
    """

    def __init__(self, message: str) -> None:
        """
        Initialize ValidationError.

        Args:
            message: Error message describing the validation failure.
        """
        super().__init__(message)
        self.message = message


class ConfigurationError(ValidationError):
    """
    Raised when parameters are inconsistent or out of their valid range.

    Covers block length mismatches, invalid bands, non-unit watermark
    vectors, unsupported sample rates and bank/config mismatches.
    """


class SignalRangeError(ValidationError):
    """
    Raised when a request reaches outside the available signal.

    Covers framing past the end of a clip, hosts too short for a
    watermark, clips too short to scan and empty score sets.
    """
