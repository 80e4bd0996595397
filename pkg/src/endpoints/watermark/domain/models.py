"""
Domain models for the watermark endpoint.

Core entities: the secret key, the embedding configuration, the bank of
orthonormal watermark vectors with their sign matrix, and where marks go
in the host.
"""

import hashlib
import json
from typing import Any, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.shared.exceptions import ConfigurationError
from src.shared.models import PROCESSING_RATE, Band
from src.shared.utils import validate_not_empty

DEFAULT_BLOCK_LEN = 480
DEFAULT_BAND = Band(20, 160)
DEFAULT_SEGMENTS = 2
DEFAULT_REPEATS = 50
DEFAULT_BETA = 0.1
MAX_CROSSFADE_MS = 1.0


class WatermarkKey:
    """
    Secret seed material with role-separated subkeys.

    The eigenvector subkey is derived from key_bytes; the sign subkey from
    sign_key_bytes when given, else from key_bytes. Changing only the sign
    key therefore leaves the watermark vectors untouched.

    Args:
        key_bytes: Seed material for the watermark vectors (non-empty).
        sign_key_bytes: Optional separate seed for the sign sequence.
    """

    def __init__(
        self, key_bytes: bytes, sign_key_bytes: Optional[bytes] = None
    ) -> None:
        """Initialize WatermarkKey."""
        if not validate_not_empty(key_bytes):
            raise ConfigurationError("Watermark key must be non-empty")
        if sign_key_bytes is not None and not validate_not_empty(sign_key_bytes):
            raise ConfigurationError("Sign key, when given, must be non-empty")
        self.key_bytes = bytes(key_bytes)
        self.sign_key_bytes = None if sign_key_bytes is None else bytes(sign_key_bytes)

    @classmethod
    def from_text(cls, key: str, sign_key: Optional[str] = None) -> "WatermarkKey":
        """Build a key from UTF-8 passphrases."""
        return cls(
            key.encode("utf-8"), None if sign_key is None else sign_key.encode("utf-8")
        )

    def vector_subkey(self) -> bytes:
        """Subkey seeding the symmetric matrix whose eigenvectors are the marks."""
        digest = hashlib.blake2b(self.key_bytes, digest_size=32, person=b"em-vectors")
        return digest.digest()

    def sign_subkey(self) -> bytes:
        """Subkey seeding the +/-1 sign matrix."""
        material = self.sign_key_bytes
        if material is None:
            material = self.key_bytes
        return hashlib.blake2b(material, digest_size=32, person=b"em-signs").digest()

    def fingerprint(self) -> dict[str, Optional[str]]:
        """Hex digests identifying the key without revealing it."""
        sign = None
        if self.sign_key_bytes is not None:
            sign = hashlib.sha256(self.sign_key_bytes).hexdigest()
        return {"key": hashlib.sha256(self.key_bytes).hexdigest(), "sign_key": sign}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, WatermarkKey):
            return NotImplemented
        return (self.key_bytes, self.sign_key_bytes) == (
            other.key_bytes,
            other.sign_key_bytes,
        )

    def __hash__(self) -> int:
        return hash((self.key_bytes, self.sign_key_bytes))

    def __repr__(self) -> str:
        return "WatermarkKey(<secret>)"


class WatermarkConfig:
    """
    Every embedding parameter of one watermark layer.

    A watermark is n_repeats repeats of n_segments blocks of block_len
    samples; segment i of every repeat carries watermark vector i with its
    own sign.

    Args:
        key: Secret key.
        block_len: Block length in samples (default 480 = 10 ms at 48 kHz).
        band: DCT bins carrying the mark (default ~1-8 kHz).
        n_segments: N_s, segments per repeat (>= 1).
        n_repeats: N_r, repeat count (>= 2).
        beta: Encoding strength relative to block band energy (> 0).
        crossfade_ms: Raised-cosine taper of the watermark delta at block
            edges, 0 (off) to 1 ms.
        sample_rate: Processing rate; only 48 kHz is supported.

    Raises:
        ConfigurationError: If any parameter is out of range.
    """

    def __init__(
        self,
        key: WatermarkKey,
        block_len: int = DEFAULT_BLOCK_LEN,
        band: Band = DEFAULT_BAND,
        n_segments: int = DEFAULT_SEGMENTS,
        n_repeats: int = DEFAULT_REPEATS,
        beta: float = DEFAULT_BETA,
        crossfade_ms: float = 0.0,
        sample_rate: int = PROCESSING_RATE,
    ) -> None:
        """Initialize WatermarkConfig."""
        if block_len < 2:
            raise ConfigurationError(f"block_len must be at least 2, got {block_len}")
        band.validate_for(block_len)
        if n_segments < 1:
            raise ConfigurationError(f"n_segments must be >= 1, got {n_segments}")
        if n_repeats < 2:
            raise ConfigurationError(
                f"n_repeats must be >= 2 (one repeat pair at least), got {n_repeats}"
            )
        if not beta > 0:
            raise ConfigurationError(f"beta must be positive, got {beta}")
        if not 0.0 <= crossfade_ms <= MAX_CROSSFADE_MS:
            raise ConfigurationError(
                f"crossfade_ms must lie in [0, {MAX_CROSSFADE_MS}], got {crossfade_ms}"
            )
        if sample_rate != PROCESSING_RATE:
            raise ConfigurationError(
                f"Only {PROCESSING_RATE} Hz processing is supported, got {sample_rate}"
            )
        self.key = key
        self.block_len = int(block_len)
        self.band = band
        self.n_segments = int(n_segments)
        self.n_repeats = int(n_repeats)
        self.beta = float(beta)
        self.crossfade_ms = float(crossfade_ms)
        self.sample_rate = int(sample_rate)

    @classmethod
    def for_duration(
        cls,
        key: WatermarkKey,
        duration_s: float,
        block_len: int = DEFAULT_BLOCK_LEN,
        n_segments: int = DEFAULT_SEGMENTS,
        **kwargs: Any,
    ) -> "WatermarkConfig":
        """
        Build a config whose total length is closest to duration_s.

        Args:
            key: Secret key.
            duration_s: Target watermark duration in seconds.
            block_len: Block length in samples.
            n_segments: Segments per repeat.
            **kwargs: Remaining WatermarkConfig arguments.

        Returns:
            Config with n_repeats = round(duration * rate / (N_s * L)).
        """
        repeats = int(round(duration_s * PROCESSING_RATE / (n_segments * block_len)))
        return cls(
            key,
            block_len=block_len,
            n_segments=n_segments,
            n_repeats=repeats,
            **kwargs,
        )

    @property
    def n_blocks(self) -> int:
        """Blocks in one watermark (N_r * N_s)."""
        return self.n_repeats * self.n_segments

    @property
    def duration_samples(self) -> int:
        """Total watermark length in samples (L * N_s * N_r)."""
        return self.block_len * self.n_blocks

    @property
    def duration_s(self) -> float:
        """Total watermark length in seconds."""
        return self.duration_samples / self.sample_rate

    @property
    def pair_count(self) -> int:
        """Number of (m > n, i) terms in the decoding score."""
        return self.n_segments * self.n_repeats * (self.n_repeats - 1) // 2

    def replace(self, **changes: Any) -> "WatermarkConfig":
        """Copy of the config with some fields replaced."""
        fields = {
            "key": self.key,
            "block_len": self.block_len,
            "band": self.band,
            "n_segments": self.n_segments,
            "n_repeats": self.n_repeats,
            "beta": self.beta,
            "crossfade_ms": self.crossfade_ms,
            "sample_rate": self.sample_rate,
        }
        fields.update(changes)
        return WatermarkConfig(**fields)

    def describe(self) -> dict[str, Any]:
        """JSON-friendly echo of the config (key shown as fingerprints)."""
        return {
            "key": self.key.fingerprint(),
            "block_len": self.block_len,
            "band": [self.band.k_low, self.band.k_high],
            "n_segments": self.n_segments,
            "n_repeats": self.n_repeats,
            "beta": self.beta,
            "crossfade_ms": self.crossfade_ms,
            "sample_rate": self.sample_rate,
        }

    @property
    def config_hash(self) -> str:
        """SHA-256 over every field; binds a bank to its config."""
        canonical = json.dumps(
            {
                **self.describe(),
                "beta": repr(self.beta),
                "crossfade_ms": repr(self.crossfade_ms),
            },
            sort_keys=True,
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def __repr__(self) -> str:
        return (
            f"WatermarkConfig(L={self.block_len}, band={self.band!r}, "
            f"N_s={self.n_segments}, N_r={self.n_repeats}, beta={self.beta})"
        )


class WatermarkBank:
    """
    The N_s band-domain watermark vectors and the N_r x N_s sign matrix.

    Arrays are stored read-only. The constructor checks shapes only;
    orthonormality and sign validity are reported by VerifyBank.

    Args:
        vectors: Array (N_s, D), one watermark per row, band coordinates.
        signs: Array (N_r, N_s) of +/-1.
        config_hash: Hash of the WatermarkConfig the bank was built for.
    """

    def __init__(self, vectors: ArrayLike, signs: ArrayLike, config_hash: str) -> None:
        """Initialize WatermarkBank."""
        vector_array = np.array(vectors, dtype=np.float64)
        sign_array = np.array(signs, dtype=np.int8)
        if vector_array.ndim != 2 or sign_array.ndim != 2:
            raise ConfigurationError("Bank vectors and signs must be 2-D arrays")
        if sign_array.shape[1] != vector_array.shape[0]:
            raise ConfigurationError(
                f"Sign matrix {sign_array.shape} does not match "
                f"{vector_array.shape[0]} vectors"
            )
        vector_array.setflags(write=False)
        sign_array.setflags(write=False)
        self.vectors: NDArray[np.float64] = vector_array
        self.signs: NDArray[np.int8] = sign_array
        self.config_hash = config_hash

    @property
    def n_segments(self) -> int:
        """N_s."""
        return int(self.vectors.shape[0])

    @property
    def n_repeats(self) -> int:
        """N_r."""
        return int(self.signs.shape[0])

    @property
    def band_width(self) -> int:
        """D, the length of each watermark vector."""
        return int(self.vectors.shape[1])

    def require_matches(self, config: WatermarkConfig) -> None:
        """
        Check that the bank was generated for config.

        Raises:
            ConfigurationError: On a hash or shape mismatch.
        """
        if self.config_hash != config.config_hash:
            raise ConfigurationError("Bank was generated for a different config")
        if (self.n_segments, self.n_repeats, self.band_width) != (
            config.n_segments,
            config.n_repeats,
            config.band.width,
        ):
            raise ConfigurationError("Bank shape does not match config")

    def block_vectors(self) -> NDArray[np.float64]:
        """Watermark vector of every block, in block order (N_r * N_s, D)."""
        return np.tile(self.vectors, (self.n_repeats, 1))

    def block_signs(self) -> NDArray[np.float64]:
        """Sign of every block, in block order (N_r * N_s,)."""
        return self.signs.reshape(-1).astype(np.float64)

    def __repr__(self) -> str:
        return (
            f"WatermarkBank(N_s={self.n_segments}, N_r={self.n_repeats}, "
            f"D={self.band_width})"
        )


class EmbedPlacement:
    """
    Where watermarks go in the host.

    Args:
        start_offset: Sample index of the first insertion (>= 0).
        repeat_period: Samples between successive insertions; 0 inserts
            once.
    """

    def __init__(self, start_offset: int = 0, repeat_period: int = 0) -> None:
        """Initialize EmbedPlacement."""
        if start_offset < 0:
            raise ConfigurationError(f"start_offset must be >= 0, got {start_offset}")
        if repeat_period < 0:
            raise ConfigurationError(f"repeat_period must be >= 0, got {repeat_period}")
        self.start_offset = int(start_offset)
        self.repeat_period = int(repeat_period)

    @classmethod
    def every(
        cls, period_s: float, start_s: float = 0.0, sample_rate: int = PROCESSING_RATE
    ) -> "EmbedPlacement":
        """Placement from seconds."""
        start = int(round(start_s * sample_rate))
        return cls(start, int(round(period_s * sample_rate)))

    def validate_for(self, config: WatermarkConfig) -> None:
        """
        Check that repeated insertions cannot overlap.

        Raises:
            ConfigurationError: If 0 < repeat_period < watermark duration.
        """
        if 0 < self.repeat_period < config.duration_samples:
            raise ConfigurationError(
                f"repeat_period {self.repeat_period} is shorter than the watermark "
                f"({config.duration_samples} samples)"
            )

    def offsets(self, host_length: int, config: WatermarkConfig) -> list[int]:
        """
        Start offsets of every whole watermark that fits in the host.

        Args:
            host_length: Host length in samples.
            config: Watermark config (gives the duration).

        Returns:
            Sorted insertion offsets (possibly empty).
        """
        self.validate_for(config)
        duration = config.duration_samples
        offsets = []
        position = self.start_offset
        while position + duration <= host_length:
            offsets.append(position)
            if self.repeat_period == 0:
                break
            position += self.repeat_period
        return offsets


class BankDiagnostics:
    """
    Report on a bank's integrity against a config.

    Args:
        max_orthonormality_deviation: max |<w_i, w_j> - delta_ij|.
        norm_deviations: | ||w_i|| - 1 | for every vector.
        hash_matches: Whether the bank's hash equals the config's.
        signs_valid: Whether every sign entry is -1 or +1.
        shape_matches: Whether (N_s, N_r, D) agree with the config.
    """

    def __init__(
        self,
        max_orthonormality_deviation: float,
        norm_deviations: list[float],
        hash_matches: bool,
        signs_valid: bool,
        shape_matches: bool,
    ) -> None:
        """Initialize BankDiagnostics."""
        self.max_orthonormality_deviation = max_orthonormality_deviation
        self.norm_deviations = norm_deviations
        self.hash_matches = hash_matches
        self.signs_valid = signs_valid
        self.shape_matches = shape_matches

    @property
    def healthy(self) -> bool:
        """True when every check passes at the 1e-9 tolerance."""
        return (
            self.max_orthonormality_deviation < 1e-9
            and self.hash_matches
            and self.signs_valid
            and self.shape_matches
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON-friendly form."""
        return {
            "max_orthonormality_deviation": self.max_orthonormality_deviation,
            "norm_deviations": self.norm_deviations,
            "hash_matches": self.hash_matches,
            "signs_valid": self.signs_valid,
            "shape_matches": self.shape_matches,
            "healthy": self.healthy,
        }


class HeadroomReport:
    """
    Objective imperceptibility proxies for a marked clip.

    Args:
        ratios_db: Per-block energy of the watermark component relative to
            the host block band energy, in dB (-inf where nothing changed,
            nan for zero-energy host blocks).
        mean_ratio_db: Mean of the finite per-block ratios, in dB (-inf
            when no block changed).
        delta_ratio_db: Band energy of the whole change (watermark plus
            removed projection) over the host band energy, all blocks
            pooled, in dB.
        peak_delta: Largest absolute sample difference.
        zero_energy_blocks: Indices of host blocks with no band energy.
    """

    def __init__(
        self,
        ratios_db: NDArray[np.float64],
        mean_ratio_db: float,
        delta_ratio_db: float,
        peak_delta: float,
        zero_energy_blocks: list[int],
    ) -> None:
        """Initialize HeadroomReport."""
        self.ratios_db = ratios_db
        self.mean_ratio_db = mean_ratio_db
        self.delta_ratio_db = delta_ratio_db
        self.peak_delta = peak_delta
        self.zero_energy_blocks = zero_energy_blocks

    def to_dict(self) -> dict[str, Any]:
        """JSON-friendly summary (per-block ratios omitted)."""
        return {
            "blocks": int(self.ratios_db.size),
            "mean_ratio_db": _json_float(self.mean_ratio_db),
            "delta_ratio_db": _json_float(self.delta_ratio_db),
            "peak_delta": self.peak_delta,
            "zero_energy_blocks": len(self.zero_energy_blocks),
        }


def _json_float(value: float) -> Any:
    if np.isfinite(value):
        return float(value)
    return None if np.isnan(value) else ("-inf" if value < 0 else "inf")
