#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/selection.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 04:57:33 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Session Selection, Class Balancing and Leave-One-Subject-Out Splitting"""
from collections import OrderedDict
import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from drowsy_lab import ALERT, DROWSY
from drowsy_lab.core.exceptions import (
    DataError,
    NoSurvivingSessionError,
    UnknownSubjectError,
)
from drowsy_lab.dataset.entity import DatasetBundle, EegSample

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
MIN_PER_CLASS = 50


# ------------------------------------------------------------------------------------------------ #
def group_by_session(samples: Sequence[EegSample]) -> List[List[EegSample]]:
    """Groups samples by (subject, session), preserving first-appearance order."""
    groups: Dict[Tuple[int, int], List[EegSample]] = OrderedDict()
    for sample in samples:
        groups.setdefault((sample.subject_id, sample.session_id), []).append(sample)
    return list(groups.values())


# ------------------------------------------------------------------------------------------------ #
def filter_and_select_sessions(
    labeled: Sequence[Sequence[EegSample]], min_per_class: int = MIN_PER_CLASS
) -> DatasetBundle:
    """Builds the unbalanced bundle: one well-populated, most balanced session per subject.

    Sessions with fewer than ``min_per_class`` samples of either class are dropped. Of the
    surviving sessions of a subject, the one minimizing |alert - drowsy| is kept; ties go
    to the session listed first.
    """
    best: Dict[int, Tuple[int, List[EegSample]]] = {}
    for session in labeled:
        if not session:
            continue
        alert = sum(1 for s in session if s.label == ALERT)
        drowsy = sum(1 for s in session if s.label == DROWSY)
        subject = session[0].subject_id
        if alert < min_per_class or drowsy < min_per_class:
            logger.info(
                f"Dropped session {session[0].session_id} of subject {subject}: "
                f"{alert} alert / {drowsy} drowsy samples."
            )
            continue
        imbalance = abs(alert - drowsy)
        if subject not in best or imbalance < best[subject][0]:
            best[subject] = (imbalance, list(session))

    if not best:
        msg = f"No session has at least {min_per_class} samples of each class."
        logger.error(msg)
        raise NoSurvivingSessionError(msg)

    samples = []
    for subject in sorted(best):
        samples.extend(best[subject][1])
    return DatasetBundle(samples=samples, kind="unbalanced")


# ------------------------------------------------------------------------------------------------ #
def build_balanced(unbalanced: DatasetBundle) -> DatasetBundle:
    """Trims each subject's majority class to the minority count.

    Alert majorities keep the samples with the shortest local RTs, drowsy majorities the
    longest. Equal RTs are resolved by original order. Sample order is preserved.
    """
    unbalanced.require_both_classes()
    keep = set()
    for subject, (alert, drowsy) in unbalanced.per_subject_counts.items():
        indexed = [(i, s) for i, s in enumerate(unbalanced) if s.subject_id == subject]
        if alert == drowsy:
            keep.update(i for i, _ in indexed)
            continue
        majority = ALERT if alert > drowsy else DROWSY
        minority_count = min(alert, drowsy)
        candidates = [(i, s) for i, s in indexed if s.label == majority]
        if any(s.local_rt is None for _, s in candidates):
            msg = f"Subject {subject} has majority samples without a local reaction time."
            logger.error(msg)
            raise DataError(msg)
        if majority == ALERT:
            candidates.sort(key=lambda item: (item[1].local_rt, item[0]))
        else:
            candidates.sort(key=lambda item: (-item[1].local_rt, item[0]))
        keep.update(i for i, _ in candidates[:minority_count])
        keep.update(i for i, s in indexed if s.label != majority)

    samples = [s for i, s in enumerate(unbalanced) if i in keep]
    return DatasetBundle(samples=samples, kind="balanced")


# ------------------------------------------------------------------------------------------------ #
def loso_split(bundle: DatasetBundle, held_out: int) -> Tuple[DatasetBundle, DatasetBundle]:
    """Returns (train, test): test holds every sample of ``held_out``, train the rest."""
    if held_out not in bundle.per_subject_counts:
        msg = f"Subject {held_out} is not in the bundle (subjects: {bundle.subjects})."
        logger.error(msg)
        raise UnknownSubjectError(msg)
    train = DatasetBundle([s for s in bundle if s.subject_id != held_out], kind=bundle.kind)
    test = DatasetBundle([s for s in bundle if s.subject_id == held_out], kind=bundle.kind)
    return train, test


# ------------------------------------------------------------------------------------------------ #
class LeaveOneSubjectOut:
    """Iterates the leave-one-subject-out folds of a bundle in subject order."""

    def __init__(self, bundle: DatasetBundle) -> None:
        if len(bundle.subjects) < 2:
            msg = "Leave-one-subject-out requires at least two subjects."
            logger.error(msg)
            raise DataError(msg)
        self._bundle = bundle

    def __len__(self) -> int:
        return len(self._bundle.subjects)

    def __iter__(self) -> Iterator[Tuple[int, DatasetBundle, DatasetBundle]]:
        for subject in self._bundle.subjects:
            train, test = loso_split(self._bundle, subject)
            yield subject, train, test
