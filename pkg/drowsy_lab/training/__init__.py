#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/training/__init__.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 03:26:54 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Loss, exact gradients, Adam optimization and the epoch/batch training loop."""
from drowsy_lab.training.backward import backward  # noqa: F401
from drowsy_lab.training.callback import Callback  # noqa: F401
from drowsy_lab.training.loss import cross_entropy_loss  # noqa: F401
from drowsy_lab.training.optimizer import AdamState, adam_step  # noqa: F401
from drowsy_lab.training.trainer import Trainer, TrainReport, fit  # noqa: F401
