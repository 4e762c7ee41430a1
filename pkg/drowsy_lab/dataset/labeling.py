#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/labeling.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 02:43:57 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Reaction-Time Based Labeling Module"""
import logging
import math
from typing import List, Sequence

import numpy as np

from drowsy_lab import ALERT, DROWSY
from drowsy_lab.core.exceptions import DataError, EmptySessionError
from drowsy_lab.dataset.entity import EegSample, Trial

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
ALERT_PERCENTILE = 5
ALERT_FACTOR = 1.5
DROWSY_FACTOR = 2.5
GLOBAL_WINDOW = 90.0


# ------------------------------------------------------------------------------------------------ #
def alert_rt(local_rts: Sequence[float]) -> float:
    """5th percentile of the local RTs, linearly interpolated between order statistics."""
    rts = np.asarray(local_rts, dtype=np.float64)
    if rts.size == 0:
        msg = "Cannot compute alert-RT of an empty session."
        logger.error(msg)
        raise EmptySessionError(msg)
    return float(np.percentile(rts, ALERT_PERCENTILE, method="linear"))


# ------------------------------------------------------------------------------------------------ #
def compute_global_rt(
    local_rts: Sequence[float], onsets: Sequence[float], window: float = GLOBAL_WINDOW
) -> np.ndarray:
    """Mean local RT of the events in the ``window`` seconds up to and including each event.

    Events near the start of a session average over whatever prefix of the window exists.
    """
    rts = np.asarray(local_rts, dtype=np.float64)
    onsets = np.asarray(onsets, dtype=np.float64)
    global_rts = np.empty_like(rts)
    for k, onset in enumerate(onsets):
        mask = (onsets <= onset) & (onsets > onset - window)
        global_rts[k] = rts[mask].mean()
    return global_rts


# ------------------------------------------------------------------------------------------------ #
def label_session(trials: Sequence[Trial]) -> List[EegSample]:
    """Labels the trials of one session against the session's alert-RT.

    A trial is alert when both RTs are below 1.5 x alert-RT and drowsy when both exceed
    2.5 x alert-RT. Everything else, including exact ties, is discarded.
    """
    if len(trials) == 0:
        msg = "Sessions must contain at least one trial."
        logger.error(msg)
        raise EmptySessionError(msg)

    trials = list(trials)
    if any(t.global_rt is None for t in trials):
        trials = _with_global_rt(trials)

    valid = []
    for trial in trials:
        if math.isfinite(trial.local_rt) and math.isfinite(trial.global_rt):
            valid.append(trial)
        else:
            logger.warning(
                f"Rejected trial of subject {trial.subject_id}, session {trial.session_id}: "
                f"non-finite reaction time (local={trial.local_rt}, global={trial.global_rt})."
            )
    if not valid:
        msg = f"Session {trials[0].session_id} has no trial with a finite reaction time."
        logger.error(msg)
        raise EmptySessionError(msg)

    baseline = alert_rt([t.local_rt for t in valid])
    samples = []
    for trial in valid:
        label = classify_rt(trial.local_rt, trial.global_rt, baseline)
        if label is None:
            continue
        samples.append(
            EegSample(
                subject_id=trial.subject_id,
                signal=trial.signal,
                label=label,
                local_rt=trial.local_rt,
                session_id=trial.session_id,
            )
        )
    logger.debug(
        f"Session {valid[0].session_id} of subject {valid[0].subject_id}: alert-RT "
        f"{baseline:.3f}s, kept {len(samples)} of {len(trials)} trials."
    )
    return samples


# ------------------------------------------------------------------------------------------------ #
def label_by_reaction_time(sessions: Sequence[Sequence[Trial]]) -> List[EegSample]:
    """Labels every session independently and returns the labeled samples in session order."""
    samples = []
    for trials in sessions:
        samples.extend(label_session(trials))
    return samples


# ------------------------------------------------------------------------------------------------ #
def classify_rt(local_rt: float, global_rt: float, baseline: float):
    """Returns ALERT, DROWSY or None when the trial is to be discarded."""
    if local_rt < ALERT_FACTOR * baseline and global_rt < ALERT_FACTOR * baseline:
        return ALERT
    if local_rt > DROWSY_FACTOR * baseline and global_rt > DROWSY_FACTOR * baseline:
        return DROWSY
    return None


def _with_global_rt(trials: List[Trial]) -> List[Trial]:
    """Fills in missing global RTs from the onsets of the session's finite-RT events.

    Supplied global RTs are kept.
    """
    if any(t.onset is None for t in trials):
        msg = "Trials without global_rt must carry an onset time."
        logger.error(msg)
        raise DataError(msg)
    finite = [t for t in trials if math.isfinite(t.local_rt)]
    global_rts = compute_global_rt([t.local_rt for t in finite], [t.onset for t in finite])
    lookup = {id(t): g for t, g in zip(finite, global_rts)}
    return [
        Trial(
            subject_id=t.subject_id,
            session_id=t.session_id,
            signal=t.signal,
            local_rt=t.local_rt,
            global_rt=t.global_rt if t.global_rt is not None else lookup.get(id(t), float("nan")),
            onset=t.onset,
        )
        for t in trials
    ]
