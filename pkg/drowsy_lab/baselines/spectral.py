#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/baselines/spectral.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 08:59:51 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Welch Spectra, Band Powers and Wavelet Entropy"""
from dataclasses import dataclass, field
import logging
from typing import Dict, List, Tuple

import numpy as np
from scipy import signal as sp_signal
from scipy.integrate import trapezoid

from drowsy_lab import CHANNEL_NAMES, RATE_HZ

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
NPERSEG = 128
NOVERLAP = 64
BANDS: Dict[str, Tuple[float, float]] = {
    "delta": (1.0, 4.0),
    "theta": (4.0, 8.0),
    "alpha": (8.0, 12.0),
    "beta": (12.0, 30.0),
}
RATIOS = ("(theta+alpha)/beta", "alpha/beta", "(theta+alpha)/(alpha+beta)", "theta/beta")
FLOOR = 1e-12
WAVELET_SCALES = (0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0)
WAVELET_SUPPORT = 8.0


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class PsdEstimate:
    """One-sided power spectral density in uV^2/Hz, one row per channel."""

    frequencies: np.ndarray
    power: np.ndarray


@dataclass
class FeatureVector:
    """Feature values with their (channel, feature) schema.

    ``flagged`` marks values substituted for an undefined computation, e.g. shares of an
    all-zero spectrum.
    """

    values: np.ndarray
    schema: List[Tuple[str, str]]
    flagged: bool = False
    notes: List[str] = field(default_factory=list)


# ------------------------------------------------------------------------------------------------ #
def welch_psd(sample: np.ndarray, fs: float = RATE_HZ) -> PsdEstimate:
    """Hann-windowed Welch average of 128-sample segments overlapping by half."""
    frequencies, power = sp_signal.welch(
        np.asarray(sample, dtype=np.float64),
        fs=fs,
        window="hann",
        nperseg=NPERSEG,
        noverlap=NOVERLAP,
        scaling="density",
        axis=-1,
    )
    return PsdEstimate(frequencies=frequencies, power=power)


def band_powers(psd: PsdEstimate) -> np.ndarray:
    """Trapezoidal band power of every channel: (channels, 4) in delta, theta, alpha, beta order."""
    powers = []
    for low, high in BANDS.values():
        mask = (psd.frequencies >= low) & (psd.frequencies <= high)
        powers.append(trapezoid(psd.power[:, mask], psd.frequencies[mask], axis=1))
    return np.stack(powers, axis=1)


# ------------------------------------------------------------------------------------------------ #
def relative_power(psd: PsdEstimate) -> FeatureVector:
    """Band shares of the four-band total, summing to 1 per channel."""
    powers = band_powers(psd)
    totals = powers.sum(axis=1, keepdims=True)
    empty = totals[:, 0] <= 0
    shares = np.divide(powers, totals, out=np.full_like(powers, 0.25), where=~empty[:, None])
    vector = FeatureVector(values=shares.ravel(), schema=feature_schema(len(powers), BANDS))
    if empty.any():
        vector.flagged = True
        vector.notes.append(f"{int(empty.sum())} channel(s) without band power")
    return vector


def log_power(psd: PsdEstimate) -> FeatureVector:
    powers = band_powers(psd)
    values = np.log(powers + FLOOR).ravel()
    return FeatureVector(values=values, schema=feature_schema(len(powers), BANDS))


def power_ratios(psd: PsdEstimate) -> FeatureVector:
    """(theta+alpha)/beta, alpha/beta, (theta+alpha)/(alpha+beta) and theta/beta per channel."""
    powers = band_powers(psd)
    theta, alpha, beta = powers[:, 1], powers[:, 2], powers[:, 3]
    ratios = np.stack(
        [
            (theta + alpha) / np.maximum(beta, FLOOR),
            alpha / np.maximum(beta, FLOOR),
            (theta + alpha) / np.maximum(alpha + beta, FLOOR),
            theta / np.maximum(beta, FLOOR),
        ],
        axis=1,
    )
    return FeatureVector(values=ratios.ravel(), schema=feature_schema(len(powers), RATIOS))


# ------------------------------------------------------------------------------------------------ #
def mexican_hat(t: np.ndarray) -> np.ndarray:
    """Unit-energy Mexican hat (negative normalized second derivative of a Gaussian)."""
    return 2.0 / (np.sqrt(3.0) * np.pi**0.25) * (1.0 - t**2) * np.exp(-(t**2) / 2.0)


def wavelet_energies(series: np.ndarray, scales=WAVELET_SCALES) -> np.ndarray:
    series = np.asarray(series, dtype=np.float64)
    energies = []
    for a in scales:
        half = int(np.ceil(WAVELET_SUPPORT * a))
        t = np.arange(-half, half + 1, dtype=np.float64)
        kernel = mexican_hat(t / a) / np.sqrt(a)
        coefficients = sp_signal.convolve(series, kernel, mode="same", method="direct")
        energies.append(np.sum(coefficients**2))
    return np.asarray(energies)


def wavelet_entropy(sample: np.ndarray) -> FeatureVector:
    """Shannon entropy of the normalized per-scale wavelet energies of every channel."""
    sample = np.atleast_2d(np.asarray(sample, dtype=np.float64))
    values, flagged = np.zeros(len(sample)), 0
    for p, series in enumerate(sample):
        energies = wavelet_energies(series)
        total = energies.sum()
        if total <= 0:
            flagged += 1
            continue
        share = energies / total
        share = share[share > 0]
        values[p] = -np.sum(share * np.log(share))
    schema = feature_schema(len(sample), ("wavelet_entropy",))
    vector = FeatureVector(values=values, schema=schema)
    if flagged:
        vector.flagged = True
        vector.notes.append(f"{flagged} channel(s) without wavelet energy")
    return vector


# ------------------------------------------------------------------------------------------------ #
def feature_schema(channels: int, names) -> List[Tuple[str, str]]:
    labels = CHANNEL_NAMES
    if channels != len(CHANNEL_NAMES):
        labels = [f"ch{p + 1}" for p in range(channels)]
    return [(channel, name) for channel in labels for name in names]
