#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/baselines/features.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 07:52:38 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Feature Matrix Extraction for the Conventional Baselines"""
from dataclasses import dataclass
import logging
from typing import Callable, Dict, List, Tuple, Type

import numpy as np
import pandas as pd

from drowsy_lab.baselines.entropy import four_entropies
from drowsy_lab.baselines.spectral import (
    FeatureVector,
    log_power,
    power_ratios,
    relative_power,
    wavelet_entropy,
    welch_psd,
)
from drowsy_lab.core.service.io import IOService
from drowsy_lab.dataset.entity import DatasetBundle

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
EXTRACTORS: Dict[str, Callable[[np.ndarray], FeatureVector]] = {
    "relative_power": lambda sample: relative_power(welch_psd(sample)),
    "log_power": lambda sample: log_power(welch_psd(sample)),
    "power_ratio": lambda sample: power_ratios(welch_psd(sample)),
    "wavelet_entropy": wavelet_entropy,
    "four_entropies": four_entropies,
}
# Extractors whose feature dimensions are z-normalized within every subject.
SUBJECT_NORMALIZED = ("four_entropies",)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class FeatureMatrix:
    values: np.ndarray
    labels: np.ndarray
    subjects: np.ndarray
    schema: List[Tuple[str, str]]
    extractor: str
    flagged: int = 0

    def subset(self, mask: np.ndarray) -> "FeatureMatrix":
        return FeatureMatrix(
            values=self.values[mask],
            labels=self.labels[mask],
            subjects=self.subjects[mask],
            schema=self.schema,
            extractor=self.extractor,
            flagged=self.flagged,
        )

    def to_frame(self) -> pd.DataFrame:
        columns = [f"{channel}:{name}" for channel, name in self.schema]
        frame = pd.DataFrame(self.values, columns=columns)
        frame.insert(0, "label", self.labels)
        frame.insert(0, "subject", self.subjects)
        return frame


# ------------------------------------------------------------------------------------------------ #
def normalize_per_subject(values: np.ndarray, subjects: np.ndarray) -> np.ndarray:
    """z-scores every feature dimension with the statistics of each subject's own samples."""
    normalized = np.empty_like(values)
    for subject in np.unique(subjects):
        rows = subjects == subject
        mean = values[rows].mean(axis=0)
        std = values[rows].std(axis=0)
        normalized[rows] = (values[rows] - mean) / np.where(std > 0, std, 1.0)
    return normalized


# ------------------------------------------------------------------------------------------------ #
def extract_features(bundle: DatasetBundle, extractor: str) -> FeatureMatrix:
    """Applies one extractor to every sample of the bundle."""
    if extractor not in EXTRACTORS:
        msg = f"Unknown extractor {extractor!r}; expected one of {list(EXTRACTORS)}."
        logger.error(msg)
        raise ValueError(msg)
    vectors = [EXTRACTORS[extractor](sample.signal) for sample in bundle]
    values = np.stack([vector.values for vector in vectors])
    subjects = bundle.subject_ids()
    if extractor in SUBJECT_NORMALIZED:
        values = normalize_per_subject(values, subjects)
    flagged = sum(vector.flagged for vector in vectors)
    if flagged:
        logger.warning(f"{flagged} of {len(vectors)} samples had flagged {extractor} features.")
    return FeatureMatrix(
        values=values,
        labels=bundle.labels(),
        subjects=subjects,
        schema=vectors[0].schema if vectors else [],
        extractor=extractor,
        flagged=flagged,
    )


def export_features_csv(
    features: FeatureMatrix, path: str, io: Type[IOService] = IOService
) -> None:
    """CSV with a schema header row: subject, label, then one '<channel>:<feature>' column each."""
    io.write(path, features.to_frame(), float_format="%.10g")
