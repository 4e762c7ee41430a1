#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/interpret/cam.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 04:20:50 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Class Activation Map, Location Ranking and Back-Tracing

Public indices follow the 1-based convention of the heatmap exports: node i in 1..2N1,
time j in 1..n-l+1, channel p in 1..m and fractional time q = j + (l - 1) / 2.
"""
from dataclasses import dataclass
import logging
from typing import List

import numpy as np

from drowsy_lab import LABELS
from drowsy_lab.model.config import ForwardCache, ModelParams

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
TOP_N = 100


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class ActivationMap:
    values: np.ndarray
    class_label: int


@dataclass(frozen=True)
class DiscriminativeLocation:
    i: int
    j: int
    value: float
    p: int = None
    q: float = None

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "value": self.value, "p": self.p, "q": self.q}


# ------------------------------------------------------------------------------------------------ #
def class_activation_map(cache: ForwardCache, params: ModelParams, c: int) -> ActivationMap:
    """M[i, j] = W6[i, c] * h4[i, j] for the single sample held in ``cache``."""
    if c not in LABELS:
        msg = f"Class must be one of {list(LABELS)}, got {c!r}."
        logger.error(msg)
        raise ValueError(msg)
    if cache.batch_size != 1:
        msg = f"Activation maps are defined per sample, the cache holds {cache.batch_size}."
        logger.error(msg)
        raise ValueError(msg)
    return ActivationMap(values=params.W6[:, c, None] * cache.h4[0], class_label=c)


# ------------------------------------------------------------------------------------------------ #
def top_locations(activation: ActivationMap, n: int = TOP_N) -> List[DiscriminativeLocation]:
    """The n largest entries, descending. Equal values keep (i, j) lexicographic order."""
    values = activation.values
    if not 1 <= n <= values.size:
        msg = f"Cannot rank {n} locations of a map with {values.size} entries."
        logger.error(msg)
        raise ValueError(msg)
    flat = values.ravel()
    order = np.argsort(-flat, kind="stable")[:n]
    rows, cols = np.unravel_index(order, values.shape)
    return [
        DiscriminativeLocation(i=int(r) + 1, j=int(c) + 1, value=float(flat[k]))
        for r, c, k in zip(rows, cols, order)
    ]


# ------------------------------------------------------------------------------------------------ #
def trace_location(i: int, j: int, X: np.ndarray, params: ModelParams) -> tuple:
    """Traces depthwise node i at time j back to the input channel driving it.

    p maximizes W1[a, p] * sum_r W2[i, r] X[p, j + r] over channels, where a is the
    pointwise filter feeding node i. Biases are left out. Equal scores resolve to the
    smallest channel.

    Returns:
        Tuple (p, q) with p 1-based and q = j + (l - 1) / 2.
    """
    length = params.W2.shape[1]
    i0, j0 = i - 1, j - 1
    a = i0 // 2
    window = np.asarray(X, dtype=np.float64)[:, j0 : j0 + length]
    scores = params.W1[a] * np.einsum("pr,r->p", window, params.W2[i0])
    p = int(np.argmax(scores)) + 1
    return p, j + (length - 1) / 2


def trace_locations(
    locations: List[DiscriminativeLocation], X: np.ndarray, params: ModelParams
) -> List[DiscriminativeLocation]:
    traced = []
    for location in locations:
        p, q = trace_location(location.i, location.j, X, params)
        traced.append(DiscriminativeLocation(location.i, location.j, location.value, p, q))
    return traced
