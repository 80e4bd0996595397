"""
Shared validation utilities.

These utilities are used across all endpoints for argument checks on
numeric inputs. They raise ConfigurationError with a message naming the
offending argument.
"""

from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.shared.exceptions import ConfigurationError


def require_vector(values: ArrayLike, name: str) -> NDArray[np.float64]:
    """
    Convert to a finite, non-empty 1-D float64 array.

    Args:
        values: Array-like of reals.
        name: Argument name used in error messages.

    Returns:
        The values as a float64 array.

    Raises:
        ConfigurationError: If empty, not 1-D or not finite.

    Example:
        >>> require_vector([1.0, 0.5], "impulse_response")
        array([1. , 0.5])
    """
    array = np.asarray(values, dtype=np.float64)
    if array.ndim != 1 or array.size == 0:
        raise ConfigurationError(f"{name} must be a non-empty 1-D vector")
    if not np.all(np.isfinite(array)):
        raise ConfigurationError(f"{name} must contain only finite values")
    return array


def require_positive(value: Any, name: str) -> None:
    """
    Check that a scalar is strictly positive.

    Args:
        value: Scalar to check.
        name: Argument name used in error messages.

    Raises:
        ConfigurationError: If value <= 0 or not a number.
    """
    if not isinstance(value, (int, float, np.integer, np.floating)) or not value > 0:
        raise ConfigurationError(f"{name} must be positive, got {value!r}")


def validate_not_empty(value: Any) -> bool:
    """
    Validate that a value is not empty.

    Checks if a value is not None, not an empty string, not an empty
    sequence or mapping, and not a zero-size array.

    Args:
        value: Value to validate.

    Returns:
        True if value is not empty, False otherwise.

    Example:
        >>> validate_not_empty(b"key")
        True
        >>> validate_not_empty([])
        False
    """
    if value is None:
        return False
    if isinstance(value, str) and not value.strip():
        return False
    if isinstance(value, np.ndarray):
        return value.size > 0
    return not (isinstance(value, (list, tuple, dict, bytes)) and len(value) == 0)
