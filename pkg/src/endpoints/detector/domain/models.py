"""
Domain models for the detector endpoint.
"""

from typing import Any, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.endpoints.watermark.domain.models import WatermarkConfig
from src.shared.exceptions import ConfigurationError
from src.shared.models import PROCESSING_RATE

DEFAULT_SCAN_STRIDE = 240
DEFAULT_NOISE_WINDOW = 400
DEFAULT_SMOOTH_WINDOW = 2
DEFAULT_THRESHOLD_MULTIPLIER = 3.0
MIN_NOISE_WINDOW = 10


class PairSubset:
    """
    Restriction of the score's pair sum.

    Args:
        segments: Segment indices to include (None = all).
        max_lag: Largest repeat distance m - n to include (None = all).
    """

    def __init__(
        self, segments: Optional[Sequence[int]] = None, max_lag: Optional[int] = None
    ) -> None:
        """Initialize PairSubset."""
        if segments is not None and len(segments) == 0:
            raise ConfigurationError("PairSubset.segments must not be empty")
        if max_lag is not None and max_lag < 1:
            raise ConfigurationError(f"max_lag must be >= 1, got {max_lag}")
        self.segments = (
            None if segments is None else tuple(sorted({int(s) for s in segments}))
        )
        self.max_lag = None if max_lag is None else int(max_lag)

    def validate_for(self, config: WatermarkConfig) -> None:
        """
        Check segment indices against the config.

        Raises:
            ConfigurationError: If a segment index is out of range.
        """
        if self.segments is not None and not all(
            0 <= s < config.n_segments for s in self.segments
        ):
            raise ConfigurationError(
                f"PairSubset segments {self.segments} "
                f"outside 0..{config.n_segments - 1}"
            )

    def segment_indices(self, config: WatermarkConfig) -> tuple[int, ...]:
        """Segments taking part in the score."""
        if self.segments is None:
            return tuple(range(config.n_segments))
        return self.segments

    def lag_limit(self, config: WatermarkConfig) -> int:
        """Largest repeat distance taking part in the score."""
        full = config.n_repeats - 1
        return full if self.max_lag is None else min(self.max_lag, full)

    def describe(self) -> dict[str, Any]:
        """JSON-friendly form."""
        return {"segments": self.segments, "max_lag": self.max_lag}


class DecoderParams:
    """
    Scan and decision parameters.

    Args:
        scan_stride: Samples between score evaluations (default 5 ms).
        noise_window: Score points in the noise statistics window.
        smooth_window: Score points averaged into the smoothed score.
        threshold_multiplier: gamma = multiplier * sigma0.
        pair_subset: Optional restriction of the pair sum.

    Raises:
        ConfigurationError: If any parameter is out of range.
    """

    def __init__(
        self,
        scan_stride: int = DEFAULT_SCAN_STRIDE,
        noise_window: int = DEFAULT_NOISE_WINDOW,
        smooth_window: int = DEFAULT_SMOOTH_WINDOW,
        threshold_multiplier: float = DEFAULT_THRESHOLD_MULTIPLIER,
        pair_subset: Optional[PairSubset] = None,
    ) -> None:
        """Initialize DecoderParams."""
        if scan_stride < 1:
            raise ConfigurationError(f"scan_stride must be >= 1, got {scan_stride}")
        if noise_window < MIN_NOISE_WINDOW:
            raise ConfigurationError(
                f"noise_window must be >= {MIN_NOISE_WINDOW} points, got {noise_window}"
            )
        if smooth_window < 1:
            raise ConfigurationError(f"smooth_window must be >= 1, got {smooth_window}")
        if not threshold_multiplier > 0:
            raise ConfigurationError(
                f"threshold_multiplier must be positive, got {threshold_multiplier}"
            )
        self.scan_stride = int(scan_stride)
        self.noise_window = int(noise_window)
        self.smooth_window = int(smooth_window)
        self.threshold_multiplier = float(threshold_multiplier)
        self.pair_subset = pair_subset

    def replace(self, **changes: Any) -> "DecoderParams":
        """Copy with some fields replaced."""
        fields = {
            "scan_stride": self.scan_stride,
            "noise_window": self.noise_window,
            "smooth_window": self.smooth_window,
            "threshold_multiplier": self.threshold_multiplier,
            "pair_subset": self.pair_subset,
        }
        fields.update(changes)
        return DecoderParams(**fields)

    def min_samples(self, config: WatermarkConfig) -> int:
        """Shortest clip giving noise_window + 1 score points."""
        return config.duration_samples + self.noise_window * self.scan_stride

    def describe(self) -> dict[str, Any]:
        """JSON-friendly form."""
        return {
            "scan_stride": self.scan_stride,
            "noise_window": self.noise_window,
            "smooth_window": self.smooth_window,
            "threshold_multiplier": self.threshold_multiplier,
            "pair_subset": (
                None if self.pair_subset is None else self.pair_subset.describe()
            ),
        }


class Detection:
    """
    One run of consecutive positive decisions.

    Args:
        start_sample: Scan time of the first positive decision.
        end_sample: Scan time of the last positive decision.
        peak_sample: Scan time of the largest smoothed score in the run.
        peak_rho_bar: That smoothed score.
    """

    def __init__(
        self, start_sample: int, end_sample: int, peak_sample: int, peak_rho_bar: float
    ) -> None:
        """Initialize Detection."""
        self.start_sample = start_sample
        self.end_sample = end_sample
        self.peak_sample = peak_sample
        self.peak_rho_bar = peak_rho_bar

    def to_dict(self, sample_rate: int = PROCESSING_RATE) -> dict[str, Any]:
        """JSON-friendly form with times in seconds."""
        return {
            "start_sample": self.start_sample,
            "end_sample": self.end_sample,
            "peak_sample": self.peak_sample,
            "start_s": self.start_sample / sample_rate,
            "peak_s": self.peak_sample / sample_rate,
            "peak_rho_bar": self.peak_rho_bar,
        }

    def __repr__(self) -> str:
        return f"Detection(start={self.start_sample}, peak={self.peak_rho_bar:.3f})"


class ScoreTrace:
    """
    Scores, noise statistics and decisions of a scan.

    Every field is an array over score points. gamma equals
    threshold_multiplier * sigma0 and decisions[p] is 1 exactly when
    rho_bar[p] >= gamma[p] with a positive sigma0.

    Args:
        times: Sample offset of each score evaluation.
        rho: Raw decoding scores.
        rho0_mean: Noise mean used at each point.
        sigma0: Noise standard deviation used at each point.
        rho_bar: Noise-mean-corrected smoothed scores.
        threshold_multiplier: Multiplier giving gamma from sigma0.
    """

    def __init__(
        self,
        times: ArrayLike,
        rho: ArrayLike,
        rho0_mean: ArrayLike,
        sigma0: ArrayLike,
        rho_bar: ArrayLike,
        threshold_multiplier: float = DEFAULT_THRESHOLD_MULTIPLIER,
    ) -> None:
        """Initialize ScoreTrace."""
        self.times: NDArray[np.int64] = np.asarray(times, dtype=np.int64)
        self.rho: NDArray[np.float64] = np.asarray(rho, dtype=np.float64)
        self.rho0_mean: NDArray[np.float64] = np.asarray(rho0_mean, dtype=np.float64)
        self.sigma0: NDArray[np.float64] = np.asarray(sigma0, dtype=np.float64)
        self.rho_bar: NDArray[np.float64] = np.asarray(rho_bar, dtype=np.float64)
        self.threshold_multiplier = float(threshold_multiplier)
        columns = (self.times, self.rho, self.rho0_mean, self.sigma0, self.rho_bar)
        lengths = {a.shape for a in columns}
        if len(lengths) != 1:
            raise ConfigurationError(
                f"ScoreTrace fields differ in shape: {sorted(lengths)}"
            )

    @property
    def gamma(self) -> NDArray[np.float64]:
        """Decision threshold at each point."""
        return self.threshold_multiplier * self.sigma0

    @property
    def decisions(self) -> NDArray[np.int8]:
        """epsilon(t): 1 where rho_bar >= gamma and the noise floor is known."""
        return ((self.rho_bar >= self.gamma) & (self.sigma0 > 0)).astype(np.int8)

    def __len__(self) -> int:
        return int(self.times.size)

    @classmethod
    def concatenate(cls, parts: Sequence["ScoreTrace"]) -> "ScoreTrace":
        """Join consecutive partial traces."""
        if not parts:
            return cls([], [], [], [], [])
        return cls(
            np.concatenate([p.times for p in parts]),
            np.concatenate([p.rho for p in parts]),
            np.concatenate([p.rho0_mean for p in parts]),
            np.concatenate([p.sigma0 for p in parts]),
            np.concatenate([p.rho_bar for p in parts]),
            parts[0].threshold_multiplier,
        )

    def detections(self) -> list[Detection]:
        """Runs of consecutive positive decisions, in time order."""
        flags = self.decisions
        edges = np.diff(np.concatenate(([0], flags, [0])))
        starts = np.flatnonzero(edges == 1)
        ends = np.flatnonzero(edges == -1)
        runs = []
        for start, end in zip(starts, ends):
            peak = start + int(np.argmax(self.rho_bar[start:end]))
            runs.append(
                Detection(
                    int(self.times[start]),
                    int(self.times[end - 1]),
                    int(self.times[peak]),
                    float(self.rho_bar[peak]),
                )
            )
        return runs

    def __repr__(self) -> str:
        return f"ScoreTrace(points={len(self)}, detections={len(self.detections())})"


class SignatureSummary:
    """
    Predicted score distribution parameters.

    Args:
        null_mean: Mean score without a watermark.
        null_std: Standard deviation of the score without a watermark.
        signal_shift: Mean score increase caused by the watermark.
    """

    def __init__(self, null_mean: float, null_std: float, signal_shift: float) -> None:
        """Initialize SignatureSummary."""
        self.null_mean = null_mean
        self.null_std = null_std
        self.signal_shift = signal_shift

    @property
    def separation(self) -> float:
        """signal_shift in units of null_std."""
        return self.signal_shift / self.null_std if self.null_std > 0 else float("inf")

    def to_dict(self) -> dict[str, float]:
        """JSON-friendly form."""
        return {
            "null_mean": self.null_mean,
            "null_std": self.null_std,
            "signal_shift": self.signal_shift,
        }


class HostStatistics:
    """
    Per-block ratio g / h between the host's band norm before embedding (g)
    and the received block's band norm (h).

    Args:
        gain_ratios: Scalar, or array broadcastable to (N_r, N_s).
    """

    def __init__(self, gain_ratios: ArrayLike = 1.0) -> None:
        """Initialize HostStatistics."""
        ratios = np.asarray(gain_ratios, dtype=np.float64)
        if not np.all(np.isfinite(ratios)) or np.any(ratios < 0):
            raise ConfigurationError("gain_ratios must be finite and non-negative")
        self.gain_ratios = ratios

    def ratios_for(self, config: WatermarkConfig) -> NDArray[np.float64]:
        """Ratios as an (N_r, N_s) array."""
        try:
            shape = (config.n_repeats, config.n_segments)
            return np.broadcast_to(self.gain_ratios, shape)
        except ValueError as exc:
            raise ConfigurationError(
                f"gain_ratios of shape {self.gain_ratios.shape} do not fit "
                f"({config.n_repeats}, {config.n_segments})"
            ) from exc
