#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/training/trainer.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 08:11:19 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Mini-Batch Training Loop"""
from __future__ import annotations

from dataclasses import dataclass, field
import logging
import math
import time
from typing import List, Sequence, Tuple, Type

import numpy as np
import pandas as pd

from drowsy_lab.core.exceptions import DataError, NumericalError
from drowsy_lab.core.service.io import IOService
from drowsy_lab.dataset.entity import DatasetBundle
from drowsy_lab.model.config import ModelConfig, ModelParams, init_params
from drowsy_lab.model.network import forward
from drowsy_lab.training.backward import backward
from drowsy_lab.training.callback import Callback, EpochLogger
from drowsy_lab.training.loss import cross_entropy_loss
from drowsy_lab.training.optimizer import AdamState, adam_step

# ------------------------------------------------------------------------------------------------ #
BATCH_SIZE = 50


# ------------------------------------------------------------------------------------------------ #
#                                      TRAIN REPORT                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class TrainReport:
    """Per-epoch mean training loss and accuracy."""

    seed: object
    losses: List[float] = field(default_factory=list)
    accuracies: List[float] = field(default_factory=list)
    wall_time: float = 0.0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "epoch": np.arange(1, len(self.losses) + 1),
                "loss": self.losses,
                "acc": self.accuracies,
            }
        )

    def export_csv(self, path: str, io: Type[IOService] = IOService) -> None:
        io.write(path, self.to_frame(), float_format="%.10g")


# ------------------------------------------------------------------------------------------------ #
#                                        TRAINER                                                   #
# ------------------------------------------------------------------------------------------------ #
class Trainer:
    """Trains the network with Adam on shuffled mini-batches.

    The final short batch of an epoch is trained on. Initialization and shuffling draw
    from two children of ``SeedSequence(seed)``, so a seed fixes the result exactly.

    Args:
        config (ModelConfig): Network geometry and variant.
        adam (AdamState): Optimizer hyperparameters. Moments are reset per fit.
        batch_size (int): Samples per mini-batch.
        callbacks (Sequence[Callback]): Hooks run at the start, after every epoch and at the end.
    """

    def __init__(
        self,
        config: ModelConfig,
        adam: AdamState = None,
        batch_size: int = BATCH_SIZE,
        callbacks: Sequence[Callback] = None,
    ) -> None:
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )
        self._config = config
        self._adam = adam or AdamState()
        self._batch_size = int(batch_size)
        self._callbacks = [EpochLogger(), *(callbacks or [])]
        if self._batch_size < 1:
            msg = f"Batch size must be positive, got {batch_size}."
            self._logger.error(msg)
            raise ValueError(msg)

    def fit(self, train: DatasetBundle, epochs: int, seed) -> Tuple[ModelParams, TrainReport]:
        if len(train) == 0:
            msg = "Cannot train on an empty training set."
            self._logger.error(msg)
            raise DataError(msg)
        if epochs < 1:
            msg = f"Epochs must be at least 1, got {epochs}."
            self._logger.error(msg)
            raise ValueError(msg)

        X, y = train.signals(), train.labels()
        sequence = seed
        if not isinstance(seed, np.random.SeedSequence):
            sequence = np.random.SeedSequence(seed)
        init_seed, shuffle_seed = sequence.spawn(2)
        shuffler = np.random.default_rng(shuffle_seed)
        params = init_params(self._config, init_seed)
        state = self._adam
        report = TrainReport(seed=seed if isinstance(seed, int) else sequence.entropy)

        start = time.perf_counter()
        for callback in self._callbacks:
            callback.on_train_begin(params)
        for epoch in range(1, epochs + 1):
            order = shuffler.permutation(len(X))
            loss_sum = correct = 0.0
            for begin in range(0, len(X), self._batch_size):
                batch = order[begin : begin + self._batch_size]
                cache = forward(X[batch], params, self._config)
                loss = cross_entropy_loss(cache.h7, y[batch], h6=cache.h6)
                if not math.isfinite(loss):
                    msg = f"Non-finite loss {loss} at epoch {epoch}."
                    self._logger.error(msg)
                    raise NumericalError(msg)
                grads = backward(cache, y[batch], params, self._config)
                params, state = adam_step(params, grads, state)
                loss_sum += loss * len(batch)
                correct += float(np.sum(np.argmax(cache.h7, axis=1) == y[batch]))
            report.losses.append(loss_sum / len(X))
            report.accuracies.append(correct / len(X))
            report.wall_time = time.perf_counter() - start
            for callback in self._callbacks:
                callback.on_epoch_end(epoch, params, report)
        for callback in self._callbacks:
            callback.on_train_end(params, report)
        return params, report


# ------------------------------------------------------------------------------------------------ #
def fit(
    train: DatasetBundle,
    config: ModelConfig,
    epochs: int,
    seed,
    adam: AdamState = None,
    batch_size: int = BATCH_SIZE,
    callbacks: Sequence[Callback] = None,
) -> Tuple[ModelParams, TrainReport]:
    """Trains a freshly initialized network. See Trainer."""
    trainer = Trainer(config=config, adam=adam, batch_size=batch_size, callbacks=callbacks)
    return trainer.fit(train=train, epochs=epochs, seed=seed)
