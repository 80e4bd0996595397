"""
Keyed pseudorandom streams.

Counter-based Philox generators keyed from a subkey and a nonce, so that
every draw is a pure function of (subkey, nonce) on any platform.
"""

import hashlib

import numpy as np


def keyed_generator(subkey: bytes, nonce: int = 0) -> np.random.Generator:
    """
    Generator for one (subkey, nonce) pair.

    The 128-bit Philox key is a BLAKE2b digest of the subkey and nonce;
    distinct nonces give unrelated streams.

    Args:
        subkey: Role-specific subkey bytes.
        nonce: Regeneration counter.

    Returns:
        numpy Generator backed by Philox.
    """
    digest = hashlib.blake2b(
        subkey + int(nonce).to_bytes(8, "little"), digest_size=16
    ).digest()
    return np.random.Generator(np.random.Philox(key=int.from_bytes(digest, "little")))


def seeded_generator(seed: int, *labels: object) -> np.random.Generator:
    """
    Generator for experiment randomness derived from a seed and labels.

    Args:
        seed: Experiment seed.
        *labels: Values distinguishing independent streams (cell index,
            purpose, ...).

    Returns:
        numpy Generator backed by Philox.
    """
    material = repr((int(seed),) + tuple(str(label) for label in labels)).encode()
    return keyed_generator(material)
