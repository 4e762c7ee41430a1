#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/synthetic.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:14:46 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Synthetic EEG Generator

Produces small, labeled bundles whose classes differ in the way the literature describes
drowsy and alert driving EEG: drowsy windows carry 10 Hz spindle bursts over central
sites, alert windows carry beta activity over peripheral sites and the odd slow frontal
deflection from eye movements. Everything sits on a 1/f background scaled by a per-subject
channel gain vector.
"""
import logging
from typing import List, NamedTuple, Tuple

import numpy as np

from drowsy_lab import (
    ALERT,
    CENTRAL_CHANNELS,
    CHANNEL_NAMES,
    DROWSY,
    FRONTAL_CHANNELS,
    N_CHANNELS,
    N_POINTS,
    PERIPHERAL_CHANNELS,
    RATE_HZ,
)
from drowsy_lab.core.exceptions import DataError
from drowsy_lab.dataset.entity import DatasetBundle, EegSample

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
BACKGROUND_UV = 10.0
SPINDLE_HZ = 10.0
SPINDLE_GAIN = 3.0
BETA_GAIN = 1.5
DEFLECTION_GAIN = 4.0
DEFLECTION_PROBABILITY = 0.3
GAIN_RANGE = (0.7, 1.3)
ALERT_RT_RANGE = (0.4, 0.8)
DROWSY_RT_RANGE = (1.6, 3.0)
MIN_SUBJECTS = 2
MIN_PER_CLASS = 10


# ------------------------------------------------------------------------------------------------ #
class SpindleEvent(NamedTuple):
    """A burst injected into a drowsy sample. Times in seconds, channel 0-based."""

    channel: int
    onset: float
    duration: float


# ------------------------------------------------------------------------------------------------ #
def pink_noise(rng: np.random.Generator, channels: int = N_CHANNELS, length: int = N_POINTS):
    """Returns unit-variance 1/f noise of shape (channels, length)."""
    white = rng.standard_normal((channels, length))
    spectrum = np.fft.rfft(white, axis=-1)
    freqs = np.fft.rfftfreq(length)
    freqs[0] = freqs[1]
    noise = np.fft.irfft(spectrum / np.sqrt(freqs), n=length, axis=-1)
    noise -= noise.mean(axis=-1, keepdims=True)
    return noise / noise.std(axis=-1, keepdims=True)


# ------------------------------------------------------------------------------------------------ #
def inject_spindle(
    signal: np.ndarray,
    channel: int,
    onset: float,
    duration: float,
    amplitude: float,
    frequency: float = SPINDLE_HZ,
    rate: int = RATE_HZ,
    phase: float = 0.0,
) -> np.ndarray:
    """Adds a Hann-enveloped sinusoid burst to one channel and returns the new signal.

    Args:
        signal (np.ndarray): channels x points array. Not modified.
        channel (int): 0-based channel row.
        onset (float): Burst start in seconds. Bursts running past the window are cut.
        duration (float): Burst length in seconds.
        amplitude (float): Peak amplitude of the envelope in microvolts.
        frequency (float): Carrier frequency in Hz.
        rate (int): Sampling rate in Hz.
        phase (float): Carrier phase in radians.
    """
    out = np.array(signal, dtype=np.float64, copy=True)
    start = int(round(onset * rate))
    width = max(int(round(duration * rate)), 1)
    stop = min(start + width, out.shape[-1])
    if start < 0 or start >= stop:
        msg = f"Burst onset {onset}s lies outside the {out.shape[-1] / rate}s window."
        logger.error(msg)
        raise DataError(msg)
    t = np.arange(width) / rate
    burst = amplitude * np.hanning(width) * np.sin(2 * np.pi * frequency * t + phase)
    out[channel, start:stop] += burst[: stop - start]
    return out


# ------------------------------------------------------------------------------------------------ #
def synth_generate(n_subjects: int, n_per_class: int, seed: int) -> DatasetBundle:
    """Generates a deterministic synthetic bundle.

    Subjects are numbered 1..n_subjects and each contributes exactly ``n_per_class`` alert
    and drowsy samples, interleaved alert first. Each subject draws from its own child
    of ``SeedSequence(seed)``.
    """
    return synth_generate_with_events(n_subjects, n_per_class, seed)[0]


def synth_generate_with_events(
    n_subjects: int, n_per_class: int, seed: int
) -> Tuple[DatasetBundle, List[List[SpindleEvent]]]:
    """As synth_generate, also returning the spindle bursts of every sample in bundle order.

    Alert samples carry an empty list.
    """
    if n_subjects < MIN_SUBJECTS or n_per_class < MIN_PER_CLASS:
        msg = (
            f"Synthetic bundles need at least {MIN_SUBJECTS} subjects and {MIN_PER_CLASS} "
            f"samples per class, got {n_subjects} and {n_per_class}."
        )
        logger.error(msg)
        raise DataError(msg)

    children = np.random.SeedSequence(seed).spawn(n_subjects)
    samples: List[EegSample] = []
    events: List[List[SpindleEvent]] = []
    for subject_id, child in enumerate(children, start=1):
        rng = np.random.default_rng(child)
        gains = rng.uniform(*GAIN_RANGE, size=N_CHANNELS)
        for _ in range(n_per_class):
            for label in (ALERT, DROWSY):
                sample, bursts = _sample(rng, subject_id, label, gains)
                samples.append(sample)
                events.append(bursts)
    logger.debug(f"Generated {len(samples)} synthetic samples for {n_subjects} subjects.")
    return DatasetBundle(samples=samples, kind="synthetic"), events


# ------------------------------------------------------------------------------------------------ #
def _sample(
    rng: np.random.Generator, subject_id: int, label: int, gains: np.ndarray
) -> Tuple[EegSample, List[SpindleEvent]]:
    scale = BACKGROUND_UV * gains
    signal = pink_noise(rng) * scale[:, None]
    window = N_POINTS / RATE_HZ
    bursts: List[SpindleEvent] = []
    if label == DROWSY:
        for name in rng.choice(CENTRAL_CHANNELS, size=rng.integers(1, 3), replace=False):
            channel = CHANNEL_NAMES.index(name)
            duration = rng.uniform(0.5, 1.0)
            onset = rng.uniform(0.0, window - duration)
            bursts.append(SpindleEvent(channel=channel, onset=onset, duration=duration))
            signal = inject_spindle(
                signal,
                channel=channel,
                onset=onset,
                duration=duration,
                amplitude=SPINDLE_GAIN * scale[channel],
                phase=rng.uniform(0, 2 * np.pi),
            )
        local_rt = rng.uniform(*DROWSY_RT_RANGE)
    else:
        t = np.arange(N_POINTS) / RATE_HZ
        for name in rng.choice(PERIPHERAL_CHANNELS, size=rng.integers(3, 6), replace=False):
            channel = CHANNEL_NAMES.index(name)
            frequency = rng.uniform(20.0, 25.0)
            phase = rng.uniform(0, 2 * np.pi)
            amplitude = BETA_GAIN * scale[channel]
            signal[channel] += amplitude * np.sin(2 * np.pi * frequency * t + phase)
        if rng.random() < DEFLECTION_PROBABILITY:
            channel = CHANNEL_NAMES.index(rng.choice(FRONTAL_CHANNELS))
            duration = rng.uniform(0.5, 1.0)
            signal = inject_spindle(
                signal,
                channel=channel,
                onset=rng.uniform(0.0, window - duration),
                duration=duration,
                amplitude=DEFLECTION_GAIN * scale[channel],
                frequency=rng.uniform(1.0, 2.0),
            )
        local_rt = rng.uniform(*ALERT_RT_RANGE)
    sample = EegSample(
        subject_id=subject_id, signal=signal, label=label, local_rt=local_rt, session_id=1
    )
    return sample, bursts
