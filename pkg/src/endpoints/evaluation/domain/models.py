"""
Domain models for the evaluation endpoint.
"""

from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from sklearn import metrics

from src.endpoints.channel.domain.models import ChannelSpec
from src.endpoints.detector.domain.models import DecoderParams, ScoreTrace
from src.endpoints.watermark.domain.models import WatermarkConfig
from src.shared.exceptions import ConfigurationError, SignalRangeError
from src.shared.models import PROCESSING_RATE

HOST_KINDS = ("white", "pink", "chords", "file")
DEFAULT_TRIALS = 200
DEFAULT_PERIOD_S = 4.0


class HostSource:
    """
    One entry of the host corpus.

    Args:
        kind: "white", "pink", "chords" or "file".
        path: WAV file for kind "file".
        level_rms: RMS level of synthetic hosts.
    """

    def __init__(
        self, kind: str, path: Optional[Path] = None, level_rms: float = 0.1
    ) -> None:
        """Initialize HostSource."""
        if kind not in HOST_KINDS:
            raise ConfigurationError(
                f"Unknown host kind {kind!r}; use one of {HOST_KINDS}"
            )
        if (kind == "file") != (path is not None):
            raise ConfigurationError("A path is required for, and only for, file hosts")
        if not level_rms > 0:
            raise ConfigurationError(f"level_rms must be positive, got {level_rms}")
        self.kind = kind
        self.path = path
        self.level_rms = float(level_rms)

    @property
    def label(self) -> str:
        """Short identifier."""
        return self.path.stem if self.path is not None else self.kind

    def __repr__(self) -> str:
        return f"HostSource({self.label!r})"


class ChannelCase:
    """
    A labelled channel of the experiment grid.

    Args:
        label: Name used in result tables.
        spec: The channel.
    """

    def __init__(self, label: str, spec: ChannelSpec) -> None:
        """Initialize ChannelCase."""
        self.label = label
        self.spec = spec


class Experiment:
    """
    A grid of detection trials.

    Cells are every (watermark config, channel) pair. In each cell the
    watermark is inserted trials_per_cell times, period_s apart, into a host
    assembled from the corpus; the same layout on an independent unmarked
    host gives the null scores.

    Args:
        host_corpus: Host sources, used in rotation across trials.
        config_grid: Watermark configs.
        channel_grid: Labelled channels.
        trials_per_cell: Insertions per cell.
        seed: Experiment seed.
        period_s: Time between insertions.
        decoder: Decoder parameters.
        fa_duration_s: Minimum length of each cell's null scan.
        fa_stride_ms: Scan stride for every scan, in milliseconds.
        unmarked: Per config, True to skip embedding (beta = 0 null cell).

    Raises:
        ConfigurationError: On empty grids, trials < 1, or a period shorter
            than 1.5 watermark durations.
    """

    def __init__(
        self,
        host_corpus: Sequence[HostSource],
        config_grid: Sequence[WatermarkConfig],
        channel_grid: Sequence[ChannelCase],
        trials_per_cell: int = DEFAULT_TRIALS,
        seed: int = 0,
        period_s: float = DEFAULT_PERIOD_S,
        decoder: Optional[DecoderParams] = None,
        fa_duration_s: float = 0.0,
        fa_stride_ms: Optional[float] = None,
        unmarked: Optional[Sequence[bool]] = None,
    ) -> None:
        """Initialize Experiment."""
        if not host_corpus or not config_grid or not channel_grid:
            raise ConfigurationError(
                "host_corpus, config_grid and channel_grid must be non-empty"
            )
        if trials_per_cell < 1:
            raise ConfigurationError(
                f"trials_per_cell must be >= 1, got {trials_per_cell}"
            )
        longest = max(config.duration_s for config in config_grid)
        if period_s < 1.5 * longest:
            raise ConfigurationError(
                f"period_s {period_s} must be at least 1.5 x the longest "
                f"watermark ({longest:.3f} s)"
            )
        flags = tuple(unmarked) if unmarked is not None else (False,) * len(config_grid)
        if len(flags) != len(config_grid):
            raise ConfigurationError("unmarked needs one flag per watermark config")
        decoder = decoder or DecoderParams()
        if fa_stride_ms is not None:
            stride = int(round(fa_stride_ms * 1e-3 * PROCESSING_RATE))
            decoder = decoder.replace(scan_stride=stride)
        self.host_corpus = list(host_corpus)
        self.config_grid = list(config_grid)
        self.channel_grid = list(channel_grid)
        self.trials_per_cell = int(trials_per_cell)
        self.seed = int(seed)
        self.period_s = float(period_s)
        self.decoder = decoder
        self.fa_duration_s = float(fa_duration_s)
        self.unmarked = flags

    def cells(self) -> list[tuple[int, int, int]]:
        """(cell index, config index, channel index), configs outermost."""
        return [
            (c * len(self.channel_grid) + k, c, k)
            for c in range(len(self.config_grid))
            for k in range(len(self.channel_grid))
        ]

    def config_label(self, index: int) -> str:
        """Label of a watermark config in result tables."""
        config = self.config_grid[index]
        label = f"dur{config.duration_s:g}s_beta{config.beta:g}"
        return f"{label}_unmarked" if self.unmarked[index] else label


class CellResult:
    """
    Scores of one (config, channel) cell.

    Args:
        index: Cell index.
        config_label: Watermark config label.
        channel_label: Channel label.
        duration_s: Watermark duration.
        drift_ppm: Channel clock drift.
        beta: Encoding strength (0 for unmarked cells).
        config_hash: Watermark config hash.
        signal_scores: Max smoothed score in each insertion window.
        signal_detected: Whether each insertion window holds a decision.
        null_scores: Same windows on the unmarked null host.
        null_detected: Decisions in the null windows.
        null_points: Every smoothed score of the null scan.
        null_point_far: Fraction of null scan points with a decision.
        raw_signal_rho: Raw score at each insertion.
        raw_null_rho: Raw score at each null window centre.
        mean_gamma: Mean decision threshold over the null scan.
        null_heavy_tail: Whether the null scan looked watermarked.
    """

    def __init__(
        self,
        index: int,
        config_label: str,
        channel_label: str,
        duration_s: float,
        drift_ppm: float,
        beta: float,
        config_hash: str,
        signal_scores: ArrayLike,
        signal_detected: ArrayLike,
        null_scores: ArrayLike,
        null_detected: ArrayLike,
        null_points: ArrayLike,
        null_point_far: float,
        raw_signal_rho: ArrayLike,
        raw_null_rho: ArrayLike,
        mean_gamma: float,
        null_heavy_tail: bool = False,
    ) -> None:
        """Initialize CellResult."""
        self.index = index
        self.config_label = config_label
        self.channel_label = channel_label
        self.duration_s = duration_s
        self.drift_ppm = drift_ppm
        self.beta = beta
        self.config_hash = config_hash
        self.signal_scores = np.asarray(signal_scores, dtype=np.float64)
        self.signal_detected = np.asarray(signal_detected, dtype=bool)
        self.null_scores = np.asarray(null_scores, dtype=np.float64)
        self.null_detected = np.asarray(null_detected, dtype=bool)
        self.null_points = np.asarray(null_points, dtype=np.float64)
        self.null_point_far = float(null_point_far)
        self.raw_signal_rho = np.asarray(raw_signal_rho, dtype=np.float64)
        self.raw_null_rho = np.asarray(raw_null_rho, dtype=np.float64)
        self.mean_gamma = float(mean_gamma)
        self.null_heavy_tail = bool(null_heavy_tail)

    @property
    def tpr(self) -> float:
        """Fraction of insertions detected at gamma."""
        return float(self.signal_detected.mean())

    @property
    def window_far(self) -> float:
        """Fraction of null windows with a decision at gamma."""
        return float(self.null_detected.mean())

    @property
    def separation(self) -> float:
        """(mean raw signal - mean raw null) / std raw null."""
        spread = float(self.raw_null_rho.std())
        shift = float(self.raw_signal_rho.mean() - self.raw_null_rho.mean())
        return shift / spread if spread > 0 else float("inf")

    def __repr__(self) -> str:
        return (
            f"CellResult({self.config_label}/{self.channel_label}, "
            f"tpr={self.tpr:.3f}, far={self.null_point_far:.2e})"
        )


class FarScanResult:
    """
    Scan over unwatermarked audio.

    Args:
        trace: The complete score trace.
        heavy_tail: Whether an abnormal share of points lies above
            5 sigma0 (a sign of watermarked input).
    """

    def __init__(self, trace: ScoreTrace, heavy_tail: bool) -> None:
        """Initialize FarScanResult."""
        self.trace = trace
        self.heavy_tail = heavy_tail

    @property
    def rho_bar(self) -> NDArray[np.float64]:
        """Every smoothed score."""
        return self.trace.rho_bar

    @property
    def sigma0(self) -> NDArray[np.float64]:
        """Noise deviation at each point."""
        return self.trace.sigma0

    def __len__(self) -> int:
        return len(self.trace)

    def far_at(self, multiplier: float) -> float:
        """Fraction of points at or above multiplier * sigma0."""
        return float(np.mean(self.rho_bar >= multiplier * self.sigma0))


class RocCurve:
    """
    ROC points over a threshold sweep.

    Thresholds ascend; FAR and TPR are non-increasing along them.

    Args:
        thresholds: Decision thresholds (first -inf, last +inf).
        far: False accept rate at each threshold.
        tpr: True positive rate at each threshold.
    """

    def __init__(self, thresholds: ArrayLike, far: ArrayLike, tpr: ArrayLike) -> None:
        """Initialize RocCurve."""
        self.thresholds: NDArray[np.float64] = np.asarray(thresholds, dtype=np.float64)
        self.far: NDArray[np.float64] = np.asarray(far, dtype=np.float64)
        self.tpr: NDArray[np.float64] = np.asarray(tpr, dtype=np.float64)
        if not self.thresholds.size:
            raise SignalRangeError("RocCurve needs at least one point")

    @property
    def auc(self) -> float:
        """Area under the curve by the trapezoid rule (0 below two points)."""
        if self.far.size < 2:
            return 0.0
        return float(metrics.auc(self.far, self.tpr))

    def tpr_at_far(self, max_far: float) -> float:
        """Best TPR among thresholds with FAR <= max_far."""
        allowed = self.far <= max_far
        return float(self.tpr[allowed].max()) if allowed.any() else 0.0

    def points(self) -> list[tuple[float, float, float]]:
        """(threshold, FAR, TPR) triples."""
        return list(zip(self.thresholds.tolist(), self.far.tolist(), self.tpr.tolist()))

    def to_dict(self) -> dict[str, Any]:
        """JSON-friendly form (infinite thresholds as strings)."""
        return {
            "auc": self.auc,
            "points": [
                [t if np.isfinite(t) else ("inf" if t > 0 else "-inf"), f, p]
                for t, f, p in self.points()
            ],
        }
