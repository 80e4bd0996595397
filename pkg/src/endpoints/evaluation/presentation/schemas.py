"""
Pydantic schemas for the evaluation endpoint.
"""

from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.endpoints.channel.application.room_response import synth_rir
from src.endpoints.channel.domain.models import ChannelSpec, room_grid
from src.endpoints.channel.presentation.schemas import ChannelSchema
from src.endpoints.detector.presentation.schemas import DecoderSchema
from src.endpoints.evaluation.domain.models import (
    DEFAULT_PERIOD_S,
    DEFAULT_TRIALS,
    ChannelCase,
    Experiment,
    HostSource,
)
from src.endpoints.watermark.presentation.schemas import WatermarkSchema


class HostSchema(BaseModel):
    """
    Host corpus entry.

    Attributes:
        kind: white, pink, chords or file.
        path: WAV file for kind file.
        level_rms: RMS level of synthetic hosts.
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["white", "pink", "chords", "file"] = Field(
        ..., description="Host kind"
    )
    path: Optional[Path] = Field(None, description="WAV file for file hosts")
    level_rms: float = Field(0.1, gt=0, description="Synthetic host RMS")

    def to_domain(self) -> HostSource:
        """Build the HostSource."""
        return HostSource(self.kind, self.path, self.level_rms)


class FarScanSchema(BaseModel):
    """
    False accept scan settings.

    Attributes:
        duration_s: Minimum null scan length per cell.
        stride_ms: Scan stride for every scan; overrides decoder.scan_stride
            when given.
    """

    model_config = ConfigDict(extra="forbid")

    duration_s: float = Field(60.0, ge=0, description="Null scan length (s)")
    stride_ms: Optional[float] = Field(None, gt=0, description="Scan stride (ms)")


class ExperimentWatermarkSchema(WatermarkSchema):
    """
    Watermark grid entry.

    Attributes:
        unmarked: Run the cell without embedding (the beta = 0 null cell).
    """

    unmarked: bool = Field(False, description="Skip embedding (null cell)")


class ExperimentSchema(BaseModel):
    """
    Experiment config for `eigenmark eval`.

    Cells are every watermark entry crossed with every channel: the
    explicit channels plus, when room_grid is set, the twelve synthetic
    rooms at each drift in drift_ppm.

    Attributes:
        schema_version: Always 1.
        seed: Experiment seed.
        hosts: Host corpus.
        watermarks: Watermark configs.
        channels: Explicit channels.
        room_grid: Add the synthetic room grid.
        drift_ppm: Drifts applied to the room grid.
        trials_per_cell: Insertions per cell.
        period_s: Time between insertions.
        decoder: Decoder parameters.
        fa_scan: False accept scan settings.
    """

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "schema_version": 1,
                "seed": 7,
                "hosts": [{"kind": "pink"}],
                "watermarks": [{"key": "k", "duration_s": 1.0}],
                "room_grid": True,
                "drift_ppm": [0, 300],
                "trials_per_cell": 20,
            }
        },
    )

    schema_version: Literal[1] = Field(..., description="Config schema version")
    seed: int = Field(0, description="Experiment seed")
    hosts: list[HostSchema] = Field(
        default_factory=lambda: [HostSchema(kind="white")],
        min_length=1,
        description="Host corpus",
    )
    watermarks: list[ExperimentWatermarkSchema] = Field(..., min_length=1)
    channels: list[ChannelSchema] = Field(default_factory=list)
    room_grid: bool = Field(False, description="Add the 12-room synthetic grid")
    drift_ppm: list[float] = Field(default_factory=lambda: [0.0], min_length=1)
    trials_per_cell: int = Field(DEFAULT_TRIALS, ge=1, description="Trials per cell")
    period_s: float = Field(DEFAULT_PERIOD_S, gt=0, description="Insertion period (s)")
    decoder: DecoderSchema = Field(default_factory=DecoderSchema)
    fa_scan: FarScanSchema = Field(default_factory=FarScanSchema)

    @model_validator(mode="after")
    def _has_channels(self) -> "ExperimentSchema":
        if not self.channels and not self.room_grid:
            raise ValueError("Give at least one channel or set room_grid")
        return self

    def channel_cases(self) -> list[ChannelCase]:
        """Explicit channels followed by the room grid at every drift."""
        cases = [
            ChannelCase(schema.label, schema.to_domain()) for schema in self.channels
        ]
        if self.room_grid:
            for room in room_grid(self.seed):
                taps = synth_rir(room)
                for drift in self.drift_ppm:
                    spec = ChannelSpec(taps, drift_ppm=drift)
                    cases.append(ChannelCase(f"{room.label}_ppm{drift:g}", spec))
        return cases

    def to_domain(self) -> Experiment:
        """
        Build the Experiment.

        Raises:
            ConfigurationError: If a grid entry is invalid.
            AudioIOError: If an impulse response file cannot be read.
        """
        return Experiment(
            host_corpus=[host.to_domain() for host in self.hosts],
            config_grid=[entry.to_domain() for entry in self.watermarks],
            channel_grid=self.channel_cases(),
            trials_per_cell=self.trials_per_cell,
            seed=self.seed,
            period_s=self.period_s,
            decoder=self.decoder.to_domain(),
            fa_duration_s=self.fa_scan.duration_s,
            fa_stride_ms=self.fa_scan.stride_ms,
            unmarked=[entry.unmarked for entry in self.watermarks],
        )

    def echo(self) -> dict[str, Any]:
        """Experiment as JSON, passphrases replaced by fingerprints."""
        document = self.model_dump(mode="json")
        document["watermarks"] = [entry.echo() for entry in self.watermarks]
        return document
