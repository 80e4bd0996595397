"""
Pydantic schemas for the watermark endpoint.

Validate the watermark and placement sections of a tool config and build
the corresponding domain objects.
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.endpoints.watermark.domain.models import (
    DEFAULT_BETA,
    DEFAULT_BLOCK_LEN,
    DEFAULT_REPEATS,
    DEFAULT_SEGMENTS,
    EmbedPlacement,
    WatermarkConfig,
    WatermarkKey,
)
from src.shared.models import Band


class WatermarkSchema(BaseModel):
    """
    Watermark section of a tool or experiment config.

    Attributes:
        key: Secret passphrase seeding the watermark vectors.
        sign_key: Optional separate passphrase for the sign sequence.
        block_len: Block length in samples.
        band_hz: Embedding band edges in Hz.
        n_segments: Segments per repeat (N_s).
        n_repeats: Repeats (N_r); ignored when duration_s is given.
        duration_s: Target watermark duration; sets N_r.
        beta: Encoding strength.
        crossfade_ms: Block-edge taper of the watermark delta.
    """

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "key": "studio-a",
                "block_len": 480,
                "band_hz": [1000, 8000],
                "n_segments": 2,
                "duration_s": 1.0,
                "beta": 0.1,
            }
        },
    )

    key: str = Field(..., min_length=1, description="Secret passphrase")
    sign_key: Optional[str] = Field(None, min_length=1, description="Sign passphrase")
    block_len: int = Field(
        DEFAULT_BLOCK_LEN, ge=2, description="Block length (samples)"
    )
    band_hz: tuple[float, float] = Field(
        (1000.0, 8000.0), description="Band edges (Hz)"
    )
    n_segments: int = Field(DEFAULT_SEGMENTS, ge=1, description="Segments per repeat")
    n_repeats: int = Field(DEFAULT_REPEATS, ge=2, description="Repeat count")
    duration_s: Optional[float] = Field(
        None, gt=0, description="Watermark duration (s)"
    )
    beta: float = Field(DEFAULT_BETA, gt=0, description="Encoding strength")
    crossfade_ms: float = Field(0.0, ge=0, le=1.0, description="Edge crossfade (ms)")

    @model_validator(mode="after")
    def _band_ordered(self) -> "WatermarkSchema":
        low, high = self.band_hz
        if not 0 <= low < high:
            raise ValueError(
                f"band_hz must satisfy 0 <= low < high, got {self.band_hz}"
            )
        return self

    def to_domain(self) -> WatermarkConfig:
        """Build the WatermarkConfig this section describes."""
        key = WatermarkKey.from_text(self.key, self.sign_key)
        band = Band.from_hz(self.band_hz[0], self.band_hz[1], self.block_len)
        common = {
            "block_len": self.block_len,
            "n_segments": self.n_segments,
            "band": band,
            "beta": self.beta,
            "crossfade_ms": self.crossfade_ms,
        }
        if self.duration_s is not None:
            return WatermarkConfig.for_duration(key, self.duration_s, **common)
        return WatermarkConfig(key, n_repeats=self.n_repeats, **common)

    def echo(self) -> dict[str, Any]:
        """Section as JSON, passphrases replaced by SHA-256 fingerprints."""
        document = self.model_dump(mode="json")
        fingerprint = WatermarkKey.from_text(self.key, self.sign_key).fingerprint()
        document["key"] = {"sha256": fingerprint["key"]}
        if self.sign_key is not None:
            document["sign_key"] = {"sha256": fingerprint["sign_key"]}
        return document


class PlacementSchema(BaseModel):
    """
    Placement section: where watermarks are inserted.

    Attributes:
        start_s: Time of the first insertion.
        period_s: Time between insertions; 0 inserts once.
    """

    model_config = ConfigDict(extra="forbid")

    start_s: float = Field(0.0, ge=0, description="First insertion time (s)")
    period_s: float = Field(0.0, ge=0, description="Insertion period (s), 0 = once")

    def to_domain(self) -> EmbedPlacement:
        """Build the EmbedPlacement this section describes."""
        return EmbedPlacement.every(self.period_s, self.start_s)
