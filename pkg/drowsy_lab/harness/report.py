#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/harness/report.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 02:56:24 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Fold Results and Evaluation Reports"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
import logging
import math
from typing import Dict, List, Optional, Type

import numpy as np
import pandas as pd

from drowsy_lab.core.service.io import IOService
from drowsy_lab.harness.metrics import Confusion, scores

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
COLUMNS = [
    "protocol",
    "variant",
    "subject",
    "repeat",
    "epoch",
    "acc",
    "precision",
    "recall",
    "tp",
    "fp",
    "tn",
    "fn",
]
FLOAT_FORMAT = "%.10g"


# ------------------------------------------------------------------------------------------------ #
#                                       FOLD RESULT                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class FoldResult:
    """Test-set outcome of one held-out subject after a given number of epochs.

    Closed-form baselines have no epochs and report epoch 0.
    """

    protocol: str
    variant: str
    subject: int
    repeat: int
    epoch: int
    tp: int
    fp: int
    tn: int
    fn: int

    @classmethod
    def from_confusion(
        cls, protocol: str, variant: str, subject: int, repeat: int, epoch: int, counts: Confusion
    ) -> FoldResult:
        return cls(protocol, variant, int(subject), int(repeat), int(epoch), *map(int, counts))

    @property
    def confusion(self) -> Confusion:
        return Confusion(self.tp, self.fp, self.tn, self.fn)

    @property
    def total(self) -> int:
        return self.confusion.total

    @property
    def accuracy(self) -> float:
        return scores(self.confusion).accuracy

    @property
    def precision(self) -> float:
        return scores(self.confusion).precision

    @property
    def recall(self) -> float:
        return scores(self.confusion).recall

    def as_dict(self) -> dict:
        row = asdict(self)
        row.update(acc=self.accuracy, precision=self.precision, recall=self.recall)
        return {column: row[column] for column in COLUMNS}


# ------------------------------------------------------------------------------------------------ #
def aggregate(folds: List[FoldResult]) -> pd.DataFrame:
    """Per-epoch mean accuracy with its standard error over all folds of that epoch.

    The standard error is the sample standard deviation (ddof=1) divided by the square
    root of the fold count; a single fold has a standard error of 0. Precision and recall
    are averaged over the folds where they are defined.
    """
    columns = ["epoch", "acc_mean", "acc_stderr", "precision_mean", "recall_mean", "count"]
    if not folds:
        return pd.DataFrame(columns=columns)
    frame = pd.DataFrame([fold.as_dict() for fold in folds])
    rows = []
    for epoch, group in frame.groupby("epoch", sort=True):
        acc = group["acc"].to_numpy(dtype=np.float64)
        count = len(acc)
        stderr = float(np.std(acc, ddof=1) / math.sqrt(count)) if count > 1 else 0.0
        rows.append(
            {
                "epoch": int(epoch),
                "acc_mean": float(np.mean(acc)),
                "acc_stderr": stderr,
                "precision_mean": _defined_mean(group["precision"]),
                "recall_mean": _defined_mean(group["recall"]),
                "count": count,
            }
        )
    return pd.DataFrame(rows, columns=columns)


def _defined_mean(values: pd.Series) -> float:
    defined = values.dropna()
    return float(defined.mean()) if len(defined) else math.nan


# ------------------------------------------------------------------------------------------------ #
#                                      EVAL REPORT                                                 #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class EvalReport:
    """All fold results of one protocol run, in fold order.

    Args:
        protocol (str): 'loso', 'unbalanced' or 'baseline'.
        variant (str): Architecture variant, or '<extractor>+<classifier>' for baselines.
        folds (List[FoldResult]): Results ordered by repeat, subject, epoch.
        descriptor (Dict): Run parameters such as seed, epochs and repeats.
    """

    protocol: str
    variant: str
    folds: List[FoldResult] = field(default_factory=list)
    descriptor: Dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.folds)

    @property
    def epochs(self) -> List[int]:
        return sorted({fold.epoch for fold in self.folds})

    def aggregate(self) -> pd.DataFrame:
        return aggregate(self.folds)

    def peak(self) -> Optional[dict]:
        """Epoch with the highest mean accuracy; the earliest wins ties."""
        summary = self.aggregate()
        if summary.empty:
            return None
        best = summary.loc[summary["acc_mean"].idxmax()]
        return {
            "epoch": int(best["epoch"]),
            "acc_mean": float(best["acc_mean"]),
            "acc_stderr": float(best["acc_stderr"]),
        }

    def by_subject(self, epoch: int = None) -> pd.DataFrame:
        """Per-subject mean accuracy, precision and recall at one epoch (the last by default)."""
        epoch = self.epochs[-1] if epoch is None else epoch
        frame = self.to_frame()
        frame = frame[frame["epoch"] == epoch]
        return (
            frame.groupby("subject", sort=True)[["acc", "precision", "recall"]]
            .mean()
            .reset_index()
        )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([fold.as_dict() for fold in self.folds], columns=COLUMNS)

    def summary(self) -> dict:
        return {
            "protocol": self.protocol,
            "variant": self.variant,
            "descriptor": self.descriptor,
            "folds": len(self.folds),
            "peak": self.peak(),
            "epochs": [_json_row(row) for row in self.aggregate().to_dict(orient="records")],
            "subjects": [_json_row(row) for row in self.by_subject().to_dict(orient="records")]
            if self.folds
            else [],
        }

    def export_csv(self, path: str, io: Type[IOService] = IOService) -> None:
        io.write(path, self.to_frame(), float_format=FLOAT_FORMAT)
        logger.info(f"Wrote {len(self.folds)} fold rows to {path}.")

    def export_summary(self, path: str, io: Type[IOService] = IOService) -> None:
        io.write(path, self.summary())


# ------------------------------------------------------------------------------------------------ #
def _json_row(row: dict) -> dict:
    """Replaces NaN by None and numpy scalars by Python numbers."""
    out = {}
    for key, value in row.items():
        if isinstance(value, (np.integer,)):
            value = int(value)
        elif isinstance(value, (float, np.floating)):
            value = None if math.isnan(value) else float(value)
        out[key] = value
    return out
