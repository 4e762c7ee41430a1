#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/harness/protocol.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 01:49:11 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Leave-One-Subject-Out Evaluation Protocols

Every fold draws its initialization and shuffling from ``SeedSequence([seed, repeat,
subject])`` so fold outcomes do not depend on which worker runs them. Fold jobs run on a
thread pool and their results are reassembled in repeat, subject, epoch order.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
import logging
import time
from typing import Callable, Dict, List, Sequence

import numpy as np

from drowsy_lab import LABELS, RANDOM_STATE, VARIANTS
from drowsy_lab.baselines.classifier import fit_classifier
from drowsy_lab.baselines.features import FeatureMatrix, extract_features
from drowsy_lab.core.exceptions import ClassMissingError, DataError, SubjectMismatchError
from drowsy_lab.dataset.entity import DatasetBundle
from drowsy_lab.dataset.selection import LeaveOneSubjectOut
from drowsy_lab.harness.base import Operator
from drowsy_lab.harness.metrics import confusion
from drowsy_lab.harness.report import EvalReport, FoldResult
from drowsy_lab.model.config import ModelConfig, ModelParams
from drowsy_lab.model.network import predict
from drowsy_lab.training.callback import Callback
from drowsy_lab.training.optimizer import AdamState
from drowsy_lab.training.trainer import BATCH_SIZE, Trainer

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
EPOCHS = 50
REPEATS = 10
UNBALANCED_EPOCHS = 11


# ------------------------------------------------------------------------------------------------ #
def fold_seed(seed: int, repeat: int, subject: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(seed), int(repeat), int(subject)])


def run_folds(jobs: Sequence, worker: Callable, threads: int = 1) -> List[FoldResult]:
    """Runs worker on every job and concatenates the results in job order."""
    if threads <= 1:
        batches = [worker(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            batches = list(executor.map(worker, jobs))
    return [result for batch in batches for result in batch]


# ------------------------------------------------------------------------------------------------ #
#                                    HELD OUT SCORER                                               #
# ------------------------------------------------------------------------------------------------ #
class HeldOutScorer(Callback):
    """Scores the held-out subject after the selected epochs.

    Args:
        test (DatasetBundle): The held-out subject's samples.
        config (ModelConfig): Network configuration used for prediction.
        fold (dict): protocol, variant, subject and repeat written into each FoldResult.
        epochs (Sequence[int]): Epochs to score. Every epoch when None.
        test_batch (int): Chunk size for batch statistics. The whole test set when None.
    """

    def __init__(
        self,
        test: DatasetBundle,
        config: ModelConfig,
        fold: dict,
        epochs: Sequence[int] = None,
        test_batch: int = None,
    ) -> None:
        super().__init__()
        self._X = test.signals()
        self._y = test.labels()
        self._config = config
        self._fold = fold
        self._epochs = None if epochs is None else set(epochs)
        self._test_batch = test_batch
        self.results: List[FoldResult] = []

    def on_epoch_end(self, epoch: int, params: ModelParams, report) -> None:
        if self._epochs is not None and epoch not in self._epochs:
            return
        predictions = predict(self._X, params, self._config, batch_size=self._test_batch)
        counts = confusion(predictions, self._y)
        self.results.append(FoldResult.from_confusion(epoch=epoch, counts=counts, **self._fold))


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class FoldJob:
    repeat: int
    subject: int
    train: DatasetBundle
    test: DatasetBundle


# ------------------------------------------------------------------------------------------------ #
#                                  NETWORK LOSO PROTOCOLS                                          #
# ------------------------------------------------------------------------------------------------ #
class BalancedLOSO(Operator):
    """Repeated leave-one-subject-out on a balanced bundle, scored after every epoch.

    Args:
        config (ModelConfig): Architecture and variant.
        epochs (int): Training epochs per fold; folds are scored after each of 1..epochs.
        repeats (int): Independent repetitions with fresh initializations.
        seed (int): Base seed of every fold seed.
        threads (int): Worker threads running folds.
        adam (AdamState): Optimizer hyperparameters.
        batch_size (int): Training mini-batch size.
        test_batch (int): Chunk size for held-out batch statistics.
    """

    protocol = "loso"

    def __init__(
        self,
        config: ModelConfig = None,
        epochs: int = EPOCHS,
        repeats: int = REPEATS,
        seed: int = RANDOM_STATE,
        threads: int = 1,
        adam: AdamState = None,
        batch_size: int = BATCH_SIZE,
        test_batch: int = None,
    ) -> None:
        super().__init__()
        self._config = config or ModelConfig()
        self._epochs = int(epochs)
        self._repeats = int(repeats)
        self._seed = int(seed)
        self._threads = max(int(threads), 1)
        self._adam = adam or AdamState()
        self._batch_size = batch_size
        self._test_batch = test_batch
        if self._epochs < 1 or self._repeats < 1:
            msg = f"Epochs and repeats must be positive, got {epochs} and {repeats}."
            self._logger.error(msg)
            raise ValueError(msg)

    def execute(self, bundle: DatasetBundle) -> EvalReport:
        start = time.perf_counter()
        jobs = [
            FoldJob(repeat, subject, train, test)
            for repeat in range(self._repeats)
            for subject, train, test in LeaveOneSubjectOut(bundle)
        ]
        folds = run_folds(jobs, self._run_fold, self._threads)
        report = EvalReport(
            protocol=self.protocol,
            variant=self._config.variant,
            folds=folds,
            descriptor=self._descriptor(),
        )
        self._logger.info(
            f"{self.protocol} {self._config.variant}: {len(jobs)} folds in "
            f"{time.perf_counter() - start:.1f}s, peak {report.peak()}."
        )
        return report

    def _run_fold(self, job: FoldJob) -> List[FoldResult]:
        self._audit(job)
        scorer = HeldOutScorer(
            test=job.test,
            config=self._config,
            fold={
                "protocol": self.protocol,
                "variant": self._config.variant,
                "subject": job.subject,
                "repeat": job.repeat,
            },
            epochs=self._scored_epochs(),
            test_batch=self._test_batch,
        )
        trainer = Trainer(
            config=self._config,
            adam=self._adam,
            batch_size=self._batch_size,
            callbacks=[scorer],
        )
        trainer.fit(job.train, self._epochs, fold_seed(self._seed, job.repeat, job.subject))
        final = scorer.results[-1]
        self._logger.info(
            f"Repeat {job.repeat}, subject {job.subject}: accuracy {final.accuracy:.4f} "
            f"after {final.epoch} epochs."
        )
        return scorer.results

    def _scored_epochs(self) -> Sequence[int]:
        return None

    def _audit(self, job: FoldJob) -> None:
        if np.any(job.train.subject_ids() == job.subject):
            msg = f"Training set of fold {job.subject} contains held-out samples."
            self._logger.error(msg)
            raise DataError(msg)
        _require_both_classes(job.subject, job.train.labels(), job.test.labels(), self._logger)

    def _descriptor(self) -> dict:
        return {
            "seed": self._seed,
            "epochs": self._epochs,
            "repeats": self._repeats,
            "batch_size": self._batch_size,
            "test_batch": self._test_batch,
            "config": self._config.to_dict(),
            "adam": {
                "eta": self._adam.eta,
                "beta1": self._adam.beta1,
                "beta2": self._adam.beta2,
                "adam_eps": self._adam.adam_eps,
            },
        }


# ------------------------------------------------------------------------------------------------ #
class UnbalancedLOSO(BalancedLOSO):
    """Trains on the other subjects' balanced data and tests on the held-out subject's
    unbalanced data. Only the final epoch is scored."""

    protocol = "unbalanced"

    def __init__(self, config: ModelConfig = None, epochs: int = UNBALANCED_EPOCHS, **kwargs):
        kwargs.setdefault("repeats", 1)
        super().__init__(config=config, epochs=epochs, **kwargs)

    def execute(self, balanced: DatasetBundle, unbalanced: DatasetBundle) -> EvalReport:
        _require_same_subjects(balanced, unbalanced, self._logger)
        start = time.perf_counter()
        jobs = [
            FoldJob(
                repeat=repeat,
                subject=subject,
                train=balanced.subset([s for s in balanced.subjects if s != subject]),
                test=unbalanced.subset([subject]),
            )
            for repeat in range(self._repeats)
            for subject in balanced.subjects
        ]
        folds = run_folds(jobs, self._run_fold, self._threads)
        report = EvalReport(
            protocol=self.protocol,
            variant=self._config.variant,
            folds=folds,
            descriptor=self._descriptor(),
        )
        self._logger.info(
            f"{self.protocol} {self._config.variant}: {len(jobs)} folds in "
            f"{time.perf_counter() - start:.1f}s, mean accuracy {report.peak()}."
        )
        return report

    def _scored_epochs(self) -> Sequence[int]:
        return [self._epochs]


# ------------------------------------------------------------------------------------------------ #
class VariantSweep(Operator):
    """Runs the balanced protocol for each architecture variant with the same seeds."""

    def __init__(self, config: ModelConfig = None, variants: Sequence[str] = None, **kwargs):
        super().__init__()
        self._config = config or ModelConfig()
        self._variants = list(variants or VARIANTS)
        self._kwargs = kwargs

    def execute(self, bundle: DatasetBundle) -> Dict[str, EvalReport]:
        reports = {}
        for variant in self._variants:
            config = replace(self._config, variant=variant)
            reports[variant] = BalancedLOSO(config=config, **self._kwargs).execute(bundle)
        return reports


# ------------------------------------------------------------------------------------------------ #
#                                     BASELINE PROTOCOL                                            #
# ------------------------------------------------------------------------------------------------ #
class BaselineLOSO(Operator):
    """Deterministic leave-one-subject-out for a feature extractor and classifier.

    With a separate test bundle the held-out subject is scored on that bundle, which gives
    the unbalanced protocol for the baselines.
    """

    protocol = "baseline"

    def __init__(self, extractor: str, classifier: str, threads: int = 1) -> None:
        super().__init__()
        self._extractor = extractor
        self._classifier = classifier.upper()
        self._threads = max(int(threads), 1)

    @property
    def variant(self) -> str:
        return f"{self._extractor}+{self._classifier}"

    def execute(self, bundle: DatasetBundle, test_bundle: DatasetBundle = None) -> EvalReport:
        start = time.perf_counter()
        if len(bundle.subjects) < 2:
            msg = "Leave-one-subject-out requires at least two subjects."
            self._logger.error(msg)
            raise DataError(msg)
        train_features = extract_features(bundle, self._extractor)
        test_features = train_features
        if test_bundle is not None:
            _require_same_subjects(bundle, test_bundle, self._logger)
            test_features = extract_features(test_bundle, self._extractor)

        jobs = [(subject, train_features, test_features) for subject in bundle.subjects]
        folds = run_folds(jobs, self._run_fold, self._threads)
        report = EvalReport(
            protocol=self.protocol,
            variant=self.variant,
            folds=folds,
            descriptor={
                "extractor": self._extractor,
                "classifier": self._classifier,
                "test": "unbalanced" if test_bundle is not None else bundle.kind,
            },
        )
        self._logger.info(
            f"{self.variant}: mean accuracy {report.peak()} in {time.perf_counter() - start:.1f}s."
        )
        return report

    def _run_fold(self, job) -> List[FoldResult]:
        subject, train_features, test_features = job
        train: FeatureMatrix = train_features.subset(train_features.subjects != subject)
        test: FeatureMatrix = test_features.subset(test_features.subjects == subject)
        _require_both_classes(subject, train.labels, test.labels, self._logger)
        model = fit_classifier(self._classifier, train.values, train.labels)
        counts = confusion(model.predict(test.values), test.labels)
        result = FoldResult.from_confusion(self.protocol, self.variant, subject, 0, 0, counts)
        self._logger.info(f"{self.variant}, subject {subject}: accuracy {result.accuracy:.4f}.")
        return [result]


# ------------------------------------------------------------------------------------------------ #
def _require_both_classes(
    subject: int, train_labels: np.ndarray, test_labels: np.ndarray, log: logging.Logger
) -> None:
    for side, labels in (("training", train_labels), ("test", test_labels)):
        missing = " and ".join(LABELS[c] for c in LABELS if not np.any(labels == c))
        if missing:
            msg = f"The {side} side of fold {subject} has no {missing} samples."
            log.error(msg)
            raise ClassMissingError(msg)


# ------------------------------------------------------------------------------------------------ #
def _require_same_subjects(a: DatasetBundle, b: DatasetBundle, log: logging.Logger) -> None:
    if set(a.subjects) != set(b.subjects):
        msg = f"Bundles disagree on subjects: {a.subjects} vs {b.subjects}."
        log.error(msg)
        raise SubjectMismatchError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                     FUNCTIONAL API                                               #
# ------------------------------------------------------------------------------------------------ #
def evaluate_loso_balanced(
    bundle: DatasetBundle,
    config: ModelConfig = None,
    epochs: int = EPOCHS,
    repeats: int = REPEATS,
    seed: int = RANDOM_STATE,
    **kwargs,
) -> EvalReport:
    if bundle.kind == "unbalanced":
        msg = "The repeated protocol expects a balanced or synthetic bundle."
        logger.error(msg)
        raise DataError(msg)
    operator = BalancedLOSO(config=config, epochs=epochs, repeats=repeats, seed=seed, **kwargs)
    return operator.execute(bundle)


def evaluate_loso_unbalanced(
    balanced: DatasetBundle,
    unbalanced: DatasetBundle,
    config: ModelConfig = None,
    epochs: int = UNBALANCED_EPOCHS,
    seed: int = RANDOM_STATE,
    **kwargs,
) -> EvalReport:
    operator = UnbalancedLOSO(config=config, epochs=epochs, seed=seed, **kwargs)
    return operator.execute(balanced, unbalanced)


def evaluate_baseline(
    bundle: DatasetBundle,
    extractor: str,
    classifier_kind: str,
    test_bundle: DatasetBundle = None,
    threads: int = 1,
) -> EvalReport:
    operator = BaselineLOSO(extractor=extractor, classifier=classifier_kind, threads=threads)
    return operator.execute(bundle, test_bundle)


def evaluate_variants(
    bundle: DatasetBundle,
    epochs: int = EPOCHS,
    repeats: int = REPEATS,
    seed: int = RANDOM_STATE,
    config: ModelConfig = None,
    **kwargs,
) -> Dict[str, EvalReport]:
    operator = VariantSweep(config=config, epochs=epochs, repeats=repeats, seed=seed, **kwargs)
    return operator.execute(bundle)
