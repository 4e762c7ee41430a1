#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/entity.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 01:36:44 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""EEG Trial, Sample and Bundle Entities"""
from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
import logging
import math
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from drowsy_lab import ALERT, CHANNEL_NAMES, DROWSY, N_CHANNELS, N_POINTS
from drowsy_lab.core.exceptions import ClassMissingError, DataError, ShapeError
from drowsy_lab.core.service.validation import ValidKind, ValidLabel

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def _as_signal(signal: np.ndarray) -> np.ndarray:
    """Returns a read-only float32 copy of a 30 x 384 signal."""
    signal = np.array(signal, dtype=np.float32, copy=True)
    if signal.shape != (N_CHANNELS, N_POINTS):
        msg = f"Expected a signal of shape {(N_CHANNELS, N_POINTS)}, got {signal.shape}."
        logger.error(msg)
        raise ShapeError(msg)
    signal.setflags(write=False)
    return signal


# ------------------------------------------------------------------------------------------------ #
#                                          TRIAL                                                   #
# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True, eq=False)
class Trial:
    """One lane-departure event: the 3 s EEG window before it plus its reaction times.

    Args:
        subject_id (int): Subject identifier.
        session_id (int): Recording session identifier.
        signal (np.ndarray): 30 x 384 microvolt values sampled at 128 Hz.
        local_rt (float): Reaction time to this event in seconds.
        global_rt (float): Mean local RT over the 90 s window before the event. When None,
            the labeler derives it from ``onset`` times.
        onset (float): Event onset in seconds from the start of the session. Optional.
    """

    subject_id: int
    session_id: int
    signal: np.ndarray
    local_rt: float
    global_rt: Optional[float] = None
    onset: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "signal", _as_signal(self.signal))
        for name in ("local_rt", "global_rt"):
            value = getattr(self, name)
            # Non-finite reaction times are tolerated here and rejected by the labeler.
            if value is not None and math.isfinite(value) and value <= 0:
                msg = f"Trial {name} must be positive, got {value}."
                logger.error(msg)
                raise DataError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                        EEG SAMPLE                                                #
# ------------------------------------------------------------------------------------------------ #
class EegSample:
    """A labeled 30 channel x 384 point EEG window.

    Args:
        subject_id (int): Subject identifier.
        signal (np.ndarray): 30 x 384 microvolt values. Stored as read-only float32.
        label (int): 0 alert, 1 drowsy.
        channel_names (Sequence[str]): 30 unique channel names. Defaults to the 10-20 montage.
        local_rt (float): Originating local reaction time, if known.
        session_id (int): Originating session, if known.
    """

    label = ValidLabel()

    def __init__(
        self,
        subject_id: int,
        signal: np.ndarray,
        label: int,
        channel_names: Sequence[str] = None,
        local_rt: float = None,
        session_id: int = None,
    ) -> None:
        self._subject_id = int(subject_id)
        self._signal = _as_signal(signal)
        self.label = int(label) if isinstance(label, (np.integer,)) else label
        self._channel_names = tuple(channel_names or CHANNEL_NAMES)
        self._local_rt = None if local_rt is None else float(local_rt)
        self._session_id = None if session_id is None else int(session_id)
        self._validate()

    def __repr__(self) -> str:
        return (
            f"EegSample(subject_id={self._subject_id}, label={self.label}, "
            f"session_id={self._session_id}, local_rt={self._local_rt})"
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, EegSample):
            return (
                self._subject_id == other.subject_id
                and self.label == other.label
                and self._channel_names == other.channel_names
                and self._local_rt == other.local_rt
                and self._session_id == other.session_id
                and self._signal.tobytes() == other.signal.tobytes()
            )
        return False

    def __hash__(self) -> int:
        return hash((self._subject_id, self.label, self._session_id, self._local_rt))

    @property
    def subject_id(self) -> int:
        return self._subject_id

    @property
    def signal(self) -> np.ndarray:
        return self._signal

    @property
    def channel_names(self) -> Tuple[str, ...]:
        return self._channel_names

    @property
    def local_rt(self) -> Optional[float]:
        return self._local_rt

    @property
    def session_id(self) -> Optional[int]:
        return self._session_id

    def _validate(self) -> None:
        if not np.all(np.isfinite(self._signal)):
            msg = f"Sample of subject {self._subject_id} contains non-finite values."
            logger.error(msg)
            raise DataError(msg)
        if len(self._channel_names) != N_CHANNELS or len(set(self._channel_names)) != N_CHANNELS:
            msg = f"Expected {N_CHANNELS} unique channel names, got {len(self._channel_names)}."
            logger.error(msg)
            raise ShapeError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                      DATASET BUNDLE                                              #
# ------------------------------------------------------------------------------------------------ #
class DatasetBundle:
    """Immutable, ordered collection of EEG samples.

    Args:
        samples (Iterable[EegSample]): The samples, kept in the given order.
        kind (str): One of 'balanced', 'unbalanced', 'synthetic'.
    """

    kind = ValidKind()

    def __init__(self, samples: Iterable[EegSample], kind: str) -> None:
        self._samples = tuple(samples)
        self.kind = kind
        self._per_subject_counts = self._count()
        self._logger = logging.getLogger(f"{self.__module__}.{self.__class__.__name__}")
        self._validate()

    def __len__(self) -> int:
        return len(self._samples)

    def __iter__(self) -> Iterator[EegSample]:
        return iter(self._samples)

    def __getitem__(self, index: int) -> EegSample:
        return self._samples[index]

    def __repr__(self) -> str:
        return f"DatasetBundle(kind={self.kind!r}, samples={len(self)}, subjects={self.subjects})"

    def __eq__(self, other) -> bool:
        if isinstance(other, DatasetBundle):
            return self.kind == other.kind and self._samples == other.samples
        return False

    # -------------------------------------------------------------------------------------------- #
    @property
    def samples(self) -> Tuple[EegSample, ...]:
        return self._samples

    @property
    def per_subject_counts(self) -> Dict[int, Tuple[int, int]]:
        """Subject id -> (alert_count, drowsy_count), ordered by subject id."""
        return dict(self._per_subject_counts)

    @property
    def subjects(self) -> List[int]:
        return list(self._per_subject_counts.keys())

    # -------------------------------------------------------------------------------------------- #
    def signals(self) -> np.ndarray:
        """Returns the stacked signals as a (samples, 30, 384) float64 array."""
        if not self._samples:
            return np.empty((0, N_CHANNELS, N_POINTS), dtype=np.float64)
        return np.stack([s.signal for s in self._samples]).astype(np.float64)

    def labels(self) -> np.ndarray:
        return np.array([s.label for s in self._samples], dtype=np.int64)

    def subject_ids(self) -> np.ndarray:
        return np.array([s.subject_id for s in self._samples], dtype=np.int64)

    def subset(self, subjects: Iterable[int], kind: str = None) -> DatasetBundle:
        """Returns the samples of the given subjects, preserving order."""
        keep = set(subjects)
        return DatasetBundle(
            samples=[s for s in self._samples if s.subject_id in keep], kind=kind or self.kind
        )

    def require_both_classes(self) -> None:
        for subject, (alert, drowsy) in self._per_subject_counts.items():
            if alert == 0 or drowsy == 0:
                msg = f"Subject {subject} has no {'alert' if alert == 0 else 'drowsy'} samples."
                self._logger.error(msg)
                raise ClassMissingError(msg)

    # -------------------------------------------------------------------------------------------- #
    def _count(self) -> Dict[int, Tuple[int, int]]:
        counts = {}
        for sample in self._samples:
            alert, drowsy = counts.get(sample.subject_id, (0, 0))
            if sample.label == ALERT:
                alert += 1
            elif sample.label == DROWSY:
                drowsy += 1
            counts[sample.subject_id] = (alert, drowsy)
        return OrderedDict(sorted(counts.items()))

    def _validate(self) -> None:
        if self.kind == "balanced":
            for subject, (alert, drowsy) in self._per_subject_counts.items():
                if alert != drowsy:
                    msg = (
                        f"A balanced bundle requires equal class counts; subject {subject} has "
                        f"{alert} alert and {drowsy} drowsy samples."
                    )
                    self._logger.error(msg)
                    raise DataError(msg)
