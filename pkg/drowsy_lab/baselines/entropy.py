#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/baselines/entropy.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 06:45:25 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Sample, Approximate, Fuzzy and Spectral Entropy"""
import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.stats import entropy as shannon

from drowsy_lab.baselines.spectral import FeatureVector, feature_schema, welch_psd

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
EMBEDDING = 2
TOLERANCE = 0.2
FUZZY_POWER = 2
SPECTRAL_RANGE = (1.0, 32.0)
ENTROPIES = ("sample_entropy", "approximate_entropy", "fuzzy_entropy", "spectral_entropy")


# ------------------------------------------------------------------------------------------------ #
def _chebyshev(templates: np.ndarray) -> np.ndarray:
    return np.max(np.abs(templates[:, None, :] - templates[None, :, :]), axis=2)


def _tolerance(series: np.ndarray, r: float) -> float:
    return TOLERANCE * float(np.std(series)) if r is None else r


# ------------------------------------------------------------------------------------------------ #
def sample_entropy(series: np.ndarray, m: int = EMBEDDING, r: float = None) -> float:
    """-ln(A / B) over the first N - m templates, self-matches excluded.

    When no template pair of length m + 1 matches, the bound ln((N - m)(N - m - 1)) is
    returned instead of infinity.
    """
    series = np.asarray(series, dtype=np.float64)
    r = _tolerance(series, r)
    count = len(series) - m
    longer = sliding_window_view(series, m + 1)[:count]
    shorter = longer[:, :m]
    off_diagonal = ~np.eye(count, dtype=bool)
    b = np.sum((_chebyshev(shorter) <= r) & off_diagonal)
    a = np.sum((_chebyshev(longer) <= r) & off_diagonal)
    if a == 0 or b == 0:
        return float(np.log(count * (count - 1)))
    return float(-np.log(a / b))


def approximate_entropy(series: np.ndarray, m: int = EMBEDDING, r: float = None) -> float:
    """Phi(m) - Phi(m + 1) with self-matches counted."""
    series = np.asarray(series, dtype=np.float64)
    r = _tolerance(series, r)

    def phi(k: int) -> float:
        templates = sliding_window_view(series, k)
        matches = np.mean(_chebyshev(templates) <= r, axis=1)
        return float(np.mean(np.log(matches)))

    return phi(m) - phi(m + 1)


def fuzzy_entropy(
    series: np.ndarray, m: int = EMBEDDING, r: float = None, power: int = FUZZY_POWER
) -> float:
    """ln phi(m) - ln phi(m + 1) with membership exp(-(d / r)^power) of mean-removed templates."""
    series = np.asarray(series, dtype=np.float64)
    r = _tolerance(series, r)
    if r <= 0:
        return 0.0
    count = len(series) - m
    off_diagonal = ~np.eye(count, dtype=bool)

    def phi(k: int) -> float:
        templates = sliding_window_view(series, k)[:count]
        templates = templates - templates.mean(axis=1, keepdims=True)
        similarity = np.exp(-((_chebyshev(templates) / r) ** power))
        return float(np.mean(similarity[off_diagonal]))

    return float(np.log(phi(m)) - np.log(phi(m + 1)))


def spectral_entropy(frequencies: np.ndarray, power: np.ndarray, band=SPECTRAL_RANGE) -> float:
    """Shannon entropy of the PSD bins in ``band``, normalized to sum 1. NaN without power."""
    mask = (frequencies >= band[0]) & (frequencies <= band[1])
    selected = np.asarray(power, dtype=np.float64)[mask]
    if selected.sum() <= 0:
        return float("nan")
    return float(shannon(selected))


# ------------------------------------------------------------------------------------------------ #
def four_entropies(sample: np.ndarray) -> FeatureVector:
    """Sample, approximate, fuzzy and spectral entropy of every channel."""
    sample = np.atleast_2d(np.asarray(sample, dtype=np.float64))
    psd = welch_psd(sample)
    values = np.zeros((len(sample), len(ENTROPIES)))
    flagged = 0
    for p, series in enumerate(sample):
        spectral = spectral_entropy(psd.frequencies, psd.power[p])
        if np.isnan(spectral):
            flagged += 1
            spectral = 0.0
        values[p] = (
            sample_entropy(series),
            approximate_entropy(series),
            fuzzy_entropy(series),
            spectral,
        )
    vector = FeatureVector(values=values.ravel(), schema=feature_schema(len(sample), ENTROPIES))
    if flagged:
        vector.flagged = True
        vector.notes.append(f"{flagged} channel(s) without spectral power")
    return vector
