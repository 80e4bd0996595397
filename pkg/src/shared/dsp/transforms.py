"""
Orthonormal DCT-II block transform and the band-limited inner product.
"""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import fft

from src.shared.exceptions import ConfigurationError
from src.shared.models import Band, BlockSpectrum


def _check_length(array: NDArray[np.float64], block_len: Optional[int]) -> None:
    if array.ndim not in (1, 2) or array.shape[-1] == 0:
        raise ConfigurationError(
            f"Expected a block or a stack of blocks, got shape {array.shape}"
        )
    if block_len is not None and array.shape[-1] != block_len:
        raise ConfigurationError(
            f"Block length {array.shape[-1]} does not match configured {block_len}"
        )


def dct_forward(block: ArrayLike, block_len: Optional[int] = None) -> BlockSpectrum:
    """
    Orthonormal DCT-II of one block, or of each row of a stack of blocks.

    Energy is preserved: the sum of squared coefficients equals the sum
    of squared samples.

    Args:
        block: Time-domain block (L,) or stacked blocks (count, L).
        block_len: Configured block length L; checked when given.

    Returns:
        DCT coefficients with the same shape as the input.

    Raises:
        ConfigurationError: On a length mismatch.
    """
    array = np.asarray(block, dtype=np.float64)
    _check_length(array, block_len)
    return fft.dct(array, type=2, norm="ortho", axis=-1)


def dct_inverse(
    spectrum: ArrayLike, block_len: Optional[int] = None
) -> NDArray[np.float64]:
    """
    Inverse of dct_forward (orthonormal DCT-III).

    Args:
        spectrum: Coefficients (L,) or stacked spectra (count, L).
        block_len: Configured block length L; checked when given.

    Returns:
        Time-domain block(s) with the same shape as the input.

    Raises:
        ConfigurationError: On a length mismatch.
    """
    array = np.asarray(spectrum, dtype=np.float64)
    _check_length(array, block_len)
    return fft.idct(array, type=2, norm="ortho", axis=-1)


def band_inner(a: BlockSpectrum, b: BlockSpectrum, band: Band) -> float:
    """
    Inner product restricted to the band: sum of a_k * b_k for k in band.

    Args:
        a: First spectrum.
        b: Second spectrum, same length as a.
        band: Bin interval; must fit inside the spectrum length.

    Returns:
        The band-limited inner product.

    Raises:
        ConfigurationError: On unequal lengths or a band that does not fit.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ConfigurationError(
            f"band_inner needs two equal-length vectors, got {a.shape} and {b.shape}"
        )
    band.validate_for(a.shape[0])
    return float(np.dot(a[band.slice], b[band.slice]))
