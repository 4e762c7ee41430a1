#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/training/callback.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:40:30 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Training Callbacks"""
from abc import ABC
import logging

from drowsy_lab.model.config import ModelParams


# ------------------------------------------------------------------------------------------------ #
#                            ABSTRACT BASE CLASS FOR CALLBACKS                                     #
# ------------------------------------------------------------------------------------------------ #
class Callback(ABC):
    """Hooks invoked by the trainer. Callbacks must not mutate the params they receive."""

    def __init__(self) -> None:
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )

    def on_train_begin(self, params: ModelParams) -> None:
        """Called once with the initial parameters."""

    def on_epoch_end(self, epoch: int, params: ModelParams, report) -> None:
        """Called after every epoch.

        Args:
            epoch (int): 1-based epoch just completed.
            params (ModelParams): Parameters at the end of the epoch.
            report (TrainReport): Report holding every epoch so far.

        """

    def on_train_end(self, params: ModelParams, report) -> None:
        """Called once training completes."""


# ------------------------------------------------------------------------------------------------ #
#                                    EPOCH LOGGER                                                  #
# ------------------------------------------------------------------------------------------------ #
class EpochLogger(Callback):
    """Logs training progress at DEBUG level."""

    def on_epoch_end(self, epoch: int, params: ModelParams, report) -> None:
        self._logger.debug(
            f"Epoch {epoch}: loss {report.losses[-1]:.6f}, accuracy {report.accuracies[-1]:.4f}"
        )

    def on_train_end(self, params: ModelParams, report) -> None:
        self._logger.debug(
            f"Trained {len(report.losses)} epochs in {report.wall_time:.2f}s (seed {report.seed})."
        )
