#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/harness/metrics.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 09:42:48 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Binary Classification Metrics with Drowsy as the Positive Class"""
import logging
import math
from typing import NamedTuple

import numpy as np

from drowsy_lab import DROWSY
from drowsy_lab.core.exceptions import ShapeError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
class Confusion(NamedTuple):
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


class Scores(NamedTuple):
    """Accuracy, precision and recall. Undefined ratios are NaN."""

    accuracy: float
    precision: float
    recall: float

    @property
    def flagged(self) -> bool:
        return math.isnan(self.precision) or math.isnan(self.recall)


# ------------------------------------------------------------------------------------------------ #
def confusion(predictions: np.ndarray, labels: np.ndarray) -> Confusion:
    predictions, labels = np.asarray(predictions), np.asarray(labels)
    if predictions.shape != labels.shape or predictions.ndim != 1:
        msg = f"Predictions {predictions.shape} and labels {labels.shape} do not align."
        logger.error(msg)
        raise ShapeError(msg)
    if len(labels) == 0:
        msg = "Cannot score an empty prediction set."
        logger.error(msg)
        raise ShapeError(msg)
    positive, actual = predictions == DROWSY, labels == DROWSY
    return Confusion(
        tp=int(np.sum(positive & actual)),
        fp=int(np.sum(positive & ~actual)),
        tn=int(np.sum(~positive & ~actual)),
        fn=int(np.sum(~positive & actual)),
    )


def scores(counts: Confusion) -> Scores:
    """Derives the three ratios from confusion counts."""
    return Scores(
        accuracy=(counts.tp + counts.tn) / counts.total,
        precision=_ratio(counts.tp, counts.tp + counts.fp),
        recall=_ratio(counts.tp, counts.tp + counts.fn),
    )


def metrics(predictions: np.ndarray, labels: np.ndarray) -> Scores:
    result = scores(confusion(predictions, labels))
    if result.flagged:
        logger.warning(
            f"Precision or recall undefined for {len(labels)} samples: no predicted or no actual "
            "drowsy samples."
        )
    return result


# ------------------------------------------------------------------------------------------------ #
def _ratio(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator else math.nan
