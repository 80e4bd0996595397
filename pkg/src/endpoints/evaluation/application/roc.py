"""
ROC curves from score sets.
"""

import numpy as np
from numpy.typing import ArrayLike
from sklearn import metrics

from src.endpoints.evaluation.domain.models import RocCurve
from src.shared.exceptions import SignalRangeError


def build_roc(signal_scores: ArrayLike, null_scores: ArrayLike) -> RocCurve:
    """
    Sweep a threshold over every distinct pooled score.

    A score counts as accepted when it is >= the threshold. The sweep runs
    from -inf (everything accepted) to +inf (nothing accepted).

    Args:
        signal_scores: Scores with a watermark present.
        null_scores: Scores without one.

    Returns:
        RocCurve with ascending thresholds.

    Raises:
        SignalRangeError: If either set is empty.
    """
    signal = np.asarray(signal_scores, dtype=np.float64).reshape(-1)
    null = np.asarray(null_scores, dtype=np.float64).reshape(-1)
    if signal.size == 0 or null.size == 0:
        raise SignalRangeError("ROC needs non-empty signal and null score sets")
    labels = np.concatenate([np.ones(signal.size), np.zeros(null.size)])
    far, tpr, thresholds = metrics.roc_curve(
        labels, np.concatenate([signal, null]), pos_label=1, drop_intermediate=False
    )
    # The first threshold accepts nothing; older releases put max + 1 there.
    thresholds[0] = np.inf
    return RocCurve(
        np.concatenate(([-np.inf], thresholds[::-1])),
        np.concatenate(([1.0], far[::-1])),
        np.concatenate(([1.0], tpr[::-1])),
    )
