"""
Shared utilities module.

Common utility functions used across all endpoints.
"""

from src.shared.utils.keystream import keyed_generator, seeded_generator
from src.shared.utils.validation import (
    require_positive,
    require_vector,
    validate_not_empty,
)

__all__ = [
    "keyed_generator",
    "require_positive",
    "require_vector",
    "seeded_generator",
    "validate_not_empty",
]
