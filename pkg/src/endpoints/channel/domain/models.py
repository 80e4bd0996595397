"""
Domain models for the channel endpoint.
"""

import math
from typing import Any, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.shared.dsp.resampling import MAX_PPM
from src.shared.exceptions import ConfigurationError
from src.shared.utils import require_vector

ROOM_RT60S = (0.15, 0.3, 0.5, 0.8)
ROOM_DIRECT_RATIOS_DB = (0.0, 6.0, 12.0)


class ChannelSpec:
    """
    One simulated playback-and-capture path.

    Applied in the fixed order gain, room filter, low/high-pass, clock
    drift, additive white Gaussian noise.

    Args:
        impulse_response: Room filter taps (default: identity [1.0]).
        drift_ppm: Playback clock error in parts per million.
        noise_snr_db: Signal-to-noise ratio of the added noise; None adds
            no noise.
        gain_db: Level change applied first.
        lowpass_hz: Optional low-pass cutoff.
        highpass_hz: Optional high-pass cutoff.
        normalize_ir: Scale the impulse response to unit energy.
        noise_seed: Seed of the noise stream.

    Raises:
        ConfigurationError: On an empty or non-finite impulse response, a
            drift of 10000 ppm or more, or non-positive cutoffs.
    """

    def __init__(
        self,
        impulse_response: ArrayLike = (1.0,),
        drift_ppm: float = 0.0,
        noise_snr_db: Optional[float] = None,
        gain_db: float = 0.0,
        lowpass_hz: Optional[float] = None,
        highpass_hz: Optional[float] = None,
        normalize_ir: bool = False,
        noise_seed: int = 0,
    ) -> None:
        """Initialize ChannelSpec."""
        taps = np.array(require_vector(impulse_response, "impulse_response"))
        if not abs(drift_ppm) < MAX_PPM:
            raise ConfigurationError(
                f"|drift_ppm| must be below {MAX_PPM:g}, got {drift_ppm}"
            )
        for name, value in (("lowpass_hz", lowpass_hz), ("highpass_hz", highpass_hz)):
            if value is not None and not value > 0:
                raise ConfigurationError(f"{name} must be positive, got {value}")
        if noise_snr_db is not None and not math.isfinite(noise_snr_db):
            raise ConfigurationError(f"noise_snr_db must be finite, got {noise_snr_db}")
        if normalize_ir:
            energy = float(np.sum(taps**2))
            if energy == 0.0:
                raise ConfigurationError(
                    "Cannot normalize an all-zero impulse response"
                )
            taps = taps / math.sqrt(energy)
        taps.setflags(write=False)
        self.impulse_response: NDArray[np.float64] = taps
        self.drift_ppm = float(drift_ppm)
        self.noise_snr_db = None if noise_snr_db is None else float(noise_snr_db)
        self.gain_db = float(gain_db)
        self.lowpass_hz = lowpass_hz
        self.highpass_hz = highpass_hz
        self.normalize_ir = normalize_ir
        self.noise_seed = int(noise_seed)

    @classmethod
    def identity(cls) -> "ChannelSpec":
        """Channel that returns its input unchanged."""
        return cls()

    def replace(self, **changes: Any) -> "ChannelSpec":
        """Copy with some fields replaced (the impulse response is kept as stored)."""
        fields = {
            "impulse_response": self.impulse_response,
            "drift_ppm": self.drift_ppm,
            "noise_snr_db": self.noise_snr_db,
            "gain_db": self.gain_db,
            "lowpass_hz": self.lowpass_hz,
            "highpass_hz": self.highpass_hz,
            "normalize_ir": False,
            "noise_seed": self.noise_seed,
        }
        fields.update(changes)
        return ChannelSpec(**fields)

    def describe(self) -> dict[str, Any]:
        """JSON-friendly summary (impulse response reduced to length and energy)."""
        return {
            "ir_taps": int(self.impulse_response.size),
            "ir_energy": float(np.sum(self.impulse_response**2)),
            "drift_ppm": self.drift_ppm,
            "noise_snr_db": self.noise_snr_db,
            "gain_db": self.gain_db,
            "lowpass_hz": self.lowpass_hz,
            "highpass_hz": self.highpass_hz,
            "noise_seed": self.noise_seed,
        }

    def __repr__(self) -> str:
        return (
            f"ChannelSpec(taps={self.impulse_response.size}, "
            f"drift_ppm={self.drift_ppm}, "
            f"snr_db={self.noise_snr_db})"
        )


class SyntheticRoom:
    """
    Parameters of a synthetic room impulse response.

    Args:
        rt60_s: Reverberation time (energy down 60 dB), seconds.
        length_s: Impulse response duration; defaults to rt60_s.
        direct_ratio_db: Direct-to-reverberant energy ratio; +inf gives a
            pure impulse.
        seed: Seed of the noise tail.

    Raises:
        ConfigurationError: If rt60_s <= 0 or length_s < rt60_s / 2.
    """

    def __init__(
        self,
        rt60_s: float,
        length_s: Optional[float] = None,
        direct_ratio_db: float = 6.0,
        seed: int = 0,
    ) -> None:
        """Initialize SyntheticRoom."""
        if not rt60_s > 0:
            raise ConfigurationError(f"rt60_s must be positive, got {rt60_s}")
        length = rt60_s if length_s is None else length_s
        if length < rt60_s / 2:
            raise ConfigurationError(
                f"length_s must be at least rt60_s / 2 = {rt60_s / 2}, got {length}"
            )
        if math.isnan(direct_ratio_db):
            raise ConfigurationError("direct_ratio_db must be a number")
        self.rt60_s = float(rt60_s)
        self.length_s = float(length)
        self.direct_ratio_db = float(direct_ratio_db)
        self.seed = int(seed)

    @property
    def label(self) -> str:
        """Short identifier used in result tables."""
        return f"rt{self.rt60_s:g}_drr{self.direct_ratio_db:g}"

    def __repr__(self) -> str:
        return (
            f"SyntheticRoom(rt60_s={self.rt60_s}, length_s={self.length_s}, "
            f"direct_ratio_db={self.direct_ratio_db}, seed={self.seed})"
        )


def room_grid(seed: int = 0) -> list[SyntheticRoom]:
    """
    The twelve evaluation rooms: RT60 in {0.15, 0.3, 0.5, 0.8} s times
    direct-to-reverberant ratio in {0, 6, 12} dB.

    Args:
        seed: Base seed; room i uses seed + i.

    Returns:
        Rooms ordered by RT60, then ratio.
    """
    rooms = []
    for rt60 in ROOM_RT60S:
        for ratio in ROOM_DIRECT_RATIOS_DB:
            room_seed = seed + len(rooms)
            rooms.append(SyntheticRoom(rt60, direct_ratio_db=ratio, seed=room_seed))
    return rooms
