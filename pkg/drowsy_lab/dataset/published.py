#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/published.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 03:50:20 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Published Dataset Adapter and Per-Subject Statistics"""
import logging
from typing import Type

import numpy as np
import pandas as pd

from drowsy_lab import N_CHANNELS, N_POINTS
from drowsy_lab.core.exceptions import DataError, DimensionMismatchError
from drowsy_lab.core.service.io import IOService
from drowsy_lab.dataset.entity import DatasetBundle, EegSample

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
# Subject id -> (alert, drowsy) sample counts of the published unbalanced set.
PUBLISHED_COUNTS = {
    1: (94, 96),
    2: (363, 66),
    3: (75, 180),
    4: (118, 74),
    5: (161, 112),
    6: (83, 116),
    7: (51, 103),
    8: (238, 132),
    9: (243, 157),
    10: (192, 54),
    11: (113, 131),
}
PUBLISHED_KEYS = ("EEGsample", "subindex", "substate")


# ------------------------------------------------------------------------------------------------ #
def import_published(path: str, kind: str = "unbalanced", io: Type[IOService] = IOService):
    """Maps the published MATLAB arrays onto a bundle.

    The file holds ``EEGsample`` (samples x 30 x 384), ``subindex`` (1-based subject per
    sample) and ``substate`` (0 alert, 1 drowsy).
    """
    mat = io.read(path)
    missing = [key for key in PUBLISHED_KEYS if key not in mat]
    if missing:
        msg = f"{path} lacks the arrays {missing}."
        logger.error(msg)
        raise DataError(msg)

    signals = np.asarray(mat["EEGsample"])
    subjects = np.asarray(mat["subindex"]).ravel().astype(np.int64)
    states = np.asarray(mat["substate"]).ravel().astype(np.int64)
    if signals.ndim != 3 or signals.shape[1:] != (N_CHANNELS, N_POINTS):
        msg = f"EEGsample must be S x {N_CHANNELS} x {N_POINTS}, got {signals.shape}."
        logger.error(msg)
        raise DimensionMismatchError(msg)
    if not len(subjects) == len(states) == signals.shape[0]:
        msg = (
            f"{signals.shape[0]} samples but {len(subjects)} subject indices and "
            f"{len(states)} states."
        )
        logger.error(msg)
        raise DataError(msg)

    samples = [
        EegSample(subject_id=subject, signal=signal, label=state)
        for signal, subject, state in zip(signals, subjects, states)
    ]
    bundle = DatasetBundle(samples=samples, kind=kind)
    logger.info(f"Imported {bundle} from {path}.")
    return bundle


# ------------------------------------------------------------------------------------------------ #
def bundle_stats(bundle: DatasetBundle) -> pd.DataFrame:
    """Per-subject alert and drowsy counts with a trailing Total row."""
    counts = bundle.per_subject_counts
    stats = pd.DataFrame(
        {
            "subject": [str(subject) for subject in counts],
            "alert": [alert for alert, _ in counts.values()],
            "drowsy": [drowsy for _, drowsy in counts.values()],
        }
    )
    total = pd.DataFrame(
        {"subject": ["Total"], "alert": [stats["alert"].sum()], "drowsy": [stats["drowsy"].sum()]}
    )
    return pd.concat([stats, total], ignore_index=True)


# ------------------------------------------------------------------------------------------------ #
def compare_to_published(bundle: DatasetBundle) -> pd.DataFrame:
    """Adds the published counts beside the bundle counts. Unpublished subjects get NaN."""
    stats = bundle_stats(bundle).set_index("subject")
    reference = pd.DataFrame(
        [
            {"subject": str(subject), "published_alert": alert, "published_drowsy": drowsy}
            for subject, (alert, drowsy) in PUBLISHED_COUNTS.items()
        ]
    ).set_index("subject")
    reference.loc["Total"] = reference.sum()
    return stats.join(reference, how="left").reset_index()
