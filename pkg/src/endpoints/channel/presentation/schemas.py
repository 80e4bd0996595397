"""
Pydantic schemas for the channel endpoint.
"""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.endpoints.channel.application.room_response import synth_rir
from src.endpoints.channel.domain.models import ChannelSpec, SyntheticRoom
from src.endpoints.channel.infrastructure.impulse_responses import load_impulse_response
from src.shared.dsp.resampling import MAX_PPM


class RoomSchema(BaseModel):
    """
    Synthetic room parameters.

    Attributes:
        rt60_s: Reverberation time in seconds.
        length_s: Impulse response length (defaults to rt60_s).
        direct_ratio_db: Direct-to-reverberant energy ratio in dB.
        seed: Seed of the reverberant tail.
    """

    model_config = ConfigDict(extra="forbid")

    rt60_s: float = Field(..., gt=0, description="Reverberation time (s)")
    length_s: Optional[float] = Field(None, gt=0, description="IR length (s)")
    direct_ratio_db: float = Field(6.0, description="Direct-to-reverberant ratio (dB)")
    seed: int = Field(0, description="Tail seed")

    def to_domain(self) -> SyntheticRoom:
        """Build the SyntheticRoom."""
        return SyntheticRoom(
            self.rt60_s, self.length_s, self.direct_ratio_db, self.seed
        )


class ChannelSchema(BaseModel):
    """
    Channel section of a tool or experiment config.

    At most one of ir_file, room and impulse_response selects the room
    filter; with none the filter is the identity.

    Attributes:
        name: Label used in result tables.
        ir_file: Measured impulse response WAV.
        room: Synthetic room.
        impulse_response: Explicit filter taps.
        normalize_ir: Scale the filter to unit energy.
        drift_ppm: Clock drift in ppm.
        noise_snr_db: Additive noise SNR, or null for none.
        gain_db: Level change.
        lowpass_hz: Low-pass cutoff, or null.
        highpass_hz: High-pass cutoff, or null.
        noise_seed: Noise stream seed.
    """

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "name": "office",
                "room": {"rt60_s": 0.3, "direct_ratio_db": 6},
                "drift_ppm": 100,
                "noise_snr_db": 30,
            }
        },
    )

    name: Optional[str] = Field(None, description="Label for result tables")
    ir_file: Optional[Path] = Field(None, description="Measured IR WAV file")
    room: Optional[RoomSchema] = Field(None, description="Synthetic room")
    impulse_response: Optional[list[float]] = Field(
        None, min_length=1, description="Explicit IR taps"
    )
    normalize_ir: bool = Field(False, description="Normalize IR to unit energy")
    drift_ppm: float = Field(
        0.0, gt=-MAX_PPM, lt=MAX_PPM, description="Clock drift (ppm)"
    )
    noise_snr_db: Optional[float] = Field(None, description="Noise SNR (dB)")
    gain_db: float = Field(0.0, description="Gain (dB)")
    lowpass_hz: Optional[float] = Field(None, gt=0, description="Low-pass cutoff (Hz)")
    highpass_hz: Optional[float] = Field(
        None, gt=0, description="High-pass cutoff (Hz)"
    )
    noise_seed: int = Field(0, description="Noise seed")

    @model_validator(mode="after")
    def _one_filter_source(self) -> "ChannelSchema":
        sources = [self.ir_file, self.room, self.impulse_response]
        if sum(source is not None for source in sources) > 1:
            raise ValueError("Give at most one of ir_file, room and impulse_response")
        return self

    @property
    def label(self) -> str:
        """Name, or a label derived from the parameters."""
        if self.name:
            return self.name
        if self.room is not None:
            source = self.room.to_domain().label
        elif self.ir_file is not None:
            source = self.ir_file.stem
        else:
            source = "flat"
        return f"{source}_ppm{self.drift_ppm:g}"

    def to_domain(self) -> ChannelSpec:
        """
        Build the ChannelSpec, loading or synthesizing the room filter.

        Raises:
            AudioIOError: If ir_file cannot be read.
        """
        if self.ir_file is not None:
            taps = load_impulse_response(self.ir_file)
        elif self.room is not None:
            taps = synth_rir(self.room.to_domain())
        elif self.impulse_response is not None:
            taps = self.impulse_response
        else:
            taps = [1.0]
        return ChannelSpec(
            taps,
            drift_ppm=self.drift_ppm,
            noise_snr_db=self.noise_snr_db,
            gain_db=self.gain_db,
            lowpass_hz=self.lowpass_hz,
            highpass_hz=self.highpass_hz,
            normalize_ir=self.normalize_ir,
            noise_seed=self.noise_seed,
        )
