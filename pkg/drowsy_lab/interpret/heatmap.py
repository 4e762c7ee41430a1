#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/interpret/heatmap.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:27:13 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Gaussian Heatmap Synthesis and Single-Sample Interpretation"""
from dataclasses import dataclass, field
import logging
from typing import List, NamedTuple, Sequence, Union

import numpy as np

from drowsy_lab import N_CHANNELS, N_POINTS
from drowsy_lab.interpret.cam import (
    TOP_N,
    DiscriminativeLocation,
    class_activation_map,
    top_locations,
    trace_locations,
)
from drowsy_lab.model.config import ModelConfig, ModelParams
from drowsy_lab.model.network import forward

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
SIGMA = 32.0


# ------------------------------------------------------------------------------------------------ #
@dataclass
class Heatmap:
    """Importance of every input point, min-max normalized onto [-1, 1].

    A raw map without spread (all entries equal) normalizes to -1 everywhere and is
    flagged as degenerate.
    """

    map: np.ndarray
    raw: np.ndarray
    channel_summary: np.ndarray
    class_label: int = None
    sigma: float = SIGMA
    top_n: int = TOP_N
    degenerate: bool = False
    locations: List[DiscriminativeLocation] = field(default_factory=list)


class Interpretation(NamedTuple):
    heatmap: Heatmap
    predicted: int
    likelihoods: np.ndarray


# ------------------------------------------------------------------------------------------------ #
def gaussian_sum(
    locations: Sequence[Union[tuple, DiscriminativeLocation]],
    sigma: float = SIGMA,
    channels: int = N_CHANNELS,
    length: int = N_POINTS,
) -> np.ndarray:
    """Raw map: per channel p, the sum of normalized Gaussians centred on the traced q."""
    raw = np.zeros((channels, length))
    q = np.arange(1, length + 1, dtype=np.float64)
    scale = 1.0 / (sigma * np.sqrt(2.0 * np.pi))
    for location in locations:
        p, qk = _pq(location)
        raw[p - 1] += scale * np.exp(-((q - qk) ** 2) / (2.0 * sigma**2))
    return raw


def normalize(raw: np.ndarray) -> tuple:
    """Affine min-max map onto [-1, 1]. Returns (map, degenerate)."""
    low, high = float(raw.min()), float(raw.max())
    if high == low:
        return np.full_like(raw, -1.0), True
    return 2.0 * (raw - low) / (high - low) - 1.0, False


# ------------------------------------------------------------------------------------------------ #
def build_heatmap(
    locations: Sequence[Union[tuple, DiscriminativeLocation]],
    sigma: float = SIGMA,
    class_label: int = None,
    channels: int = N_CHANNELS,
    length: int = N_POINTS,
) -> Heatmap:
    if len(locations) == 0:
        msg = "A heatmap needs at least one traced location."
        logger.error(msg)
        raise ValueError(msg)
    raw = gaussian_sum(locations, sigma, channels, length)
    normalized, degenerate = normalize(raw)
    if degenerate:
        logger.warning("Raw heatmap has no spread; emitting the all -1 map.")
    return Heatmap(
        map=normalized,
        raw=raw,
        channel_summary=normalized.mean(axis=1),
        class_label=class_label,
        sigma=sigma,
        top_n=len(locations),
        degenerate=degenerate,
        locations=[loc for loc in locations if isinstance(loc, DiscriminativeLocation)],
    )


# ------------------------------------------------------------------------------------------------ #
def interpret_sample(
    X: np.ndarray,
    params: ModelParams,
    config: ModelConfig,
    sigma: float = SIGMA,
    top_n: int = TOP_N,
    reference: np.ndarray = None,
) -> Interpretation:
    """Explains the predicted class of one sample.

    Batch norm statistics are taken from ``reference``, a batch of signals shaped like X
    (usually every sample of X's subject). When X is one of them, the prediction equals
    its row of ``predict_proba`` over the batch. Without a reference the sample is
    normalized over its own time axis, which pools every channel to beta and makes the
    prediction independent of X. A class activation map without any nonzero entry carries
    no evidence and yields a degenerate heatmap.
    """
    if config.variant != "full":
        msg = f"Interpretation is defined for the full architecture, not {config.variant!r}."
        logger.error(msg)
        raise ValueError(msg)
    X = np.asarray(X, dtype=np.float64)
    X = X[None, :, :] if X.ndim == 2 else X
    if reference is None:
        logger.warning(
            "No reference batch given; batch norm statistics come from the sample alone "
            "and the prediction does not depend on the input."
        )
        stats = None
    else:
        batch = forward(reference, params, config)
        stats = (batch.bn_mean, batch.bn_var)
    cache = forward(X, params, config, stats)
    likelihoods = cache.h7[0]
    predicted = int(np.argmax(likelihoods))
    activation = class_activation_map(cache, params, predicted)
    locations = trace_locations(top_locations(activation, top_n), cache.x[0], params)

    if not np.any(activation.values):
        logger.warning(f"Activation map of class {predicted} is identically zero.")
        raw = np.zeros((config.m, config.n))
        heatmap = Heatmap(
            map=np.full_like(raw, -1.0),
            raw=raw,
            channel_summary=np.full(config.m, -1.0),
            class_label=predicted,
            sigma=sigma,
            top_n=top_n,
            degenerate=True,
            locations=locations,
        )
    else:
        heatmap = build_heatmap(locations, sigma, predicted, config.m, config.n)
    return Interpretation(heatmap=heatmap, predicted=predicted, likelihoods=likelihoods)


# ------------------------------------------------------------------------------------------------ #
def _pq(location) -> tuple:
    if isinstance(location, DiscriminativeLocation):
        return location.p, location.q
    return int(location[0]), float(location[1])
