"""
Pydantic schemas for the detector endpoint.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.endpoints.detector.domain.models import (
    DEFAULT_NOISE_WINDOW,
    DEFAULT_SCAN_STRIDE,
    DEFAULT_SMOOTH_WINDOW,
    DEFAULT_THRESHOLD_MULTIPLIER,
    MIN_NOISE_WINDOW,
    DecoderParams,
    PairSubset,
)


class PairSubsetSchema(BaseModel):
    """
    Optional restriction of the pair sum.

    Attributes:
        segments: Segment indices to include.
        max_lag: Largest repeat distance to include.
    """

    model_config = ConfigDict(extra="forbid")

    segments: Optional[list[int]] = Field(
        None, min_length=1, description="Segments used"
    )
    max_lag: Optional[int] = Field(None, ge=1, description="Largest repeat lag used")

    def to_domain(self) -> PairSubset:
        """Build the PairSubset."""
        return PairSubset(self.segments, self.max_lag)


class DecoderSchema(BaseModel):
    """
    Decoder section of a tool or experiment config.

    Attributes:
        scan_stride: Samples between score evaluations.
        noise_window: Score points in the noise window.
        smooth_window: Score points averaged per decision.
        threshold_multiplier: gamma / sigma0.
        pair_subset: Optional pair restriction.
    """

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {"scan_stride": 240, "noise_window": 400, "smooth_window": 2}
        },
    )

    scan_stride: int = Field(
        DEFAULT_SCAN_STRIDE, ge=1, description="Scan stride (samples)"
    )
    noise_window: int = Field(
        DEFAULT_NOISE_WINDOW, ge=MIN_NOISE_WINDOW, description="Noise window (points)"
    )
    smooth_window: int = Field(
        DEFAULT_SMOOTH_WINDOW, ge=1, description="Smoothing (points)"
    )
    threshold_multiplier: float = Field(
        DEFAULT_THRESHOLD_MULTIPLIER, gt=0, description="Threshold in noise deviations"
    )
    pair_subset: Optional[PairSubsetSchema] = Field(
        None, description="Pair restriction"
    )

    def to_domain(self) -> DecoderParams:
        """Build the DecoderParams."""
        subset = self.pair_subset
        return DecoderParams(
            scan_stride=self.scan_stride,
            noise_window=self.noise_window,
            smooth_window=self.smooth_window,
            threshold_multiplier=self.threshold_multiplier,
            pair_subset=None if subset is None else subset.to_domain(),
        )
