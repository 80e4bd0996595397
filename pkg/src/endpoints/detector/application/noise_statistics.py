"""
Channel-adaptive noise statistics and the decision trace.

The noise mean and deviation track a trailing window of smoothed scores,
the statistic the threshold is compared against.
Points lying more than multiplier * sigma above the current mean are kept
out of the window, so a watermark passing through does not inflate the
noise floor. The window is seeded by sigma-clipping the first
noise_window points. Points scoring exactly zero (digital silence) never
enter the window.
"""

from collections import deque
from itertools import islice

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.endpoints.detector.domain.models import DecoderParams, ScoreTrace
from src.shared.exceptions import SignalRangeError

MAX_CLIP_ITERATIONS = 20


def sigma_clip(values: ArrayLike, multiplier: float) -> NDArray[np.bool_]:
    """
    Mask of the values kept by iterative one-sided sigma clipping.

    Values more than multiplier standard deviations above the mean of the
    kept set are dropped until the kept set is stable.
    """
    data = np.asarray(values, dtype=np.float64)
    keep = np.ones(data.size, dtype=bool)
    for _ in range(MAX_CLIP_ITERATIONS):
        kept = data[keep]
        updated = data - kept.mean() <= multiplier * kept.std()
        if np.array_equal(updated, keep):
            break
        keep = updated
    return keep


class RollingNoiseStatistics:
    """
    Mean and population deviation of the last `window` admitted points.

    Running sums are refreshed from the window every `window` updates.
    """

    def __init__(self, window: int, multiplier: float) -> None:
        """Initialize RollingNoiseStatistics."""
        self.window = window
        self.multiplier = multiplier
        self._values: deque[float] = deque()
        self._sum = 0.0
        self._sum_sq = 0.0
        self._updates = 0

    def seed(self, values: ArrayLike) -> tuple[float, float]:
        """
        Fill the window with the sigma-clipped values.

        Returns:
            The (mean, sigma) of the seeded window.
        """
        data = np.asarray(values, dtype=np.float64)
        for value in data[sigma_clip(data, self.multiplier)]:
            self._push(float(value))
        return self.current()

    def current(self) -> tuple[float, float]:
        """(mean, sigma) of the window."""
        count = len(self._values)
        mean = self._sum / count
        variance = max(self._sum_sq / count - mean * mean, 0.0)
        return mean, variance**0.5

    def admit(self, rho: float, mean: float, sigma: float) -> bool:
        """Add rho to the window unless it lies above mean + multiplier * sigma."""
        if rho - mean > self.multiplier * sigma:
            return False
        self._push(rho)
        return True

    def _push(self, value: float) -> None:
        self._values.append(value)
        self._sum += value
        self._sum_sq += value * value
        if len(self._values) > self.window:
            old = self._values.popleft()
            self._sum -= old
            self._sum_sq -= old * old
        self._updates += 1
        if self._updates % self.window == 0:
            self._sum = sum(self._values)
            self._sum_sq = sum(v * v for v in self._values)


class TraceAccumulator:
    """
    Turns raw scores, in time order, into ScoreTrace points.

    A point's smoothed score is the mean of its own raw score and the next
    smooth_window - 1, so points are released with that delay. The noise
    statistics track smoothed scores, the same statistic the threshold is
    applied to, and a point's statistics use only earlier points (or the
    seed window). Feeding the same scores in any chunking yields the same
    trace.
    """

    def __init__(self, params: DecoderParams) -> None:
        """Initialize TraceAccumulator."""
        self.params = params
        self._stats = RollingNoiseStatistics(
            params.noise_window, params.threshold_multiplier
        )
        self._pending: deque[tuple[int, float]] = deque()
        self._seed_points: list[tuple[int, float, float]] = []
        self._seeded = False
        self._rows: list[tuple[int, float, float, float, float]] = []

    @property
    def seeded(self) -> bool:
        """Whether the noise statistics have been seeded."""
        return self._seeded

    def push(self, times: ArrayLike, rhos: ArrayLike) -> ScoreTrace:
        """
        Add raw scores and return the points that became final.

        Args:
            times: Sample offsets of the scores.
            rhos: Raw scores.

        Returns:
            Possibly empty partial trace.
        """
        offsets = np.asarray(times).tolist()
        scores = np.asarray(rhos, dtype=np.float64).tolist()
        for t, rho in zip(offsets, scores):
            self._pending.append((int(t), float(rho)))
            if len(self._pending) >= self.params.smooth_window:
                self._smooth_front()
        return self._release()

    def finish(self) -> ScoreTrace:
        """
        Release the remaining points with shortened smoothing windows.

        Raises:
            SignalRangeError: If fewer than noise_window points were pushed.
        """
        while self._pending:
            self._smooth_front()
        if not self._seeded:
            raise SignalRangeError(
                f"clip too short for a scan: {len(self._seed_points)} score points, "
                f"need at least {self.params.noise_window}"
            )
        return self._release()

    def _smooth_front(self) -> None:
        ahead = [r for _, r in islice(self._pending, 0, self.params.smooth_window)]
        t, rho = self._pending.popleft()
        self._observe(t, rho, sum(ahead) / len(ahead))

    def _observe(self, t: int, rho: float, smoothed: float) -> None:
        if not self._seeded:
            self._seed_points.append((t, rho, smoothed))
            if len(self._seed_points) == self.params.noise_window:
                values = [z for _, _, z in self._seed_points]
                audible = [z for z in values if z != 0.0] or values
                mean, sigma = self._stats.seed(audible)
                self._rows.extend(
                    (pt, pr, mean, sigma, pz - mean) for pt, pr, pz in self._seed_points
                )
                self._seed_points = []
                self._seeded = True
            return
        mean, sigma = self._stats.current()
        self._rows.append((t, rho, mean, sigma, smoothed - mean))
        # Silent stretch: the score says nothing about the noise floor.
        if smoothed != 0.0:
            self._stats.admit(smoothed, mean, sigma)

    def _release(self) -> ScoreTrace:
        rows, self._rows = self._rows, []
        if not rows:
            return ScoreTrace([], [], [], [], [], self.params.threshold_multiplier)
        columns = list(zip(*rows))
        return ScoreTrace(
            *columns, threshold_multiplier=self.params.threshold_multiplier
        )
