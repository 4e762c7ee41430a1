#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/__init__.py                                                             #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 02:17:23 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Drowsy Lab: interpretable cross-subject EEG drowsiness recognition."""

# ------------------------------------------------------------------------------------------------ #
#                                    REPRODUCIBILITY                                               #
# ------------------------------------------------------------------------------------------------ #
RANDOM_STATE = 55
# ------------------------------------------------------------------------------------------------ #
#                                    SAMPLE GEOMETRY                                               #
# ------------------------------------------------------------------------------------------------ #
N_CHANNELS = 30
N_POINTS = 384
RATE_HZ = 128
CHANNEL_NAMES = [
    "FP1", "FP2", "F7", "F3", "FZ", "F4", "F8", "FT7", "FC3", "FCZ",
    "FC4", "FT8", "T3", "C3", "CZ", "C4", "T4", "TP7", "CP3", "CPZ",
    "CP4", "TP8", "T5", "P3", "PZ", "P4", "T6", "O1", "OZ", "O2",
]  # fmt: skip
CENTRAL_CHANNELS = ["FC3", "FCZ", "FC4", "C3", "CZ", "C4", "CP3", "CPZ", "CP4"]
PERIPHERAL_CHANNELS = ["F7", "F8", "FT7", "FT8", "T3", "T4", "TP7", "TP8", "T5", "T6", "O1", "O2"]
FRONTAL_CHANNELS = ["FP1", "FP2", "F3", "FZ", "F4"]
# ------------------------------------------------------------------------------------------------ #
#                                         LABELS                                                   #
# ------------------------------------------------------------------------------------------------ #
ALERT = 0
DROWSY = 1
LABELS = {ALERT: "alert", DROWSY: "drowsy"}
# ------------------------------------------------------------------------------------------------ #
#                                     DATASET KINDS                                                #
# ------------------------------------------------------------------------------------------------ #
KINDS = ["balanced", "unbalanced", "synthetic"]
# ------------------------------------------------------------------------------------------------ #
#                                    MODEL VARIANTS                                                #
# ------------------------------------------------------------------------------------------------ #
VARIANTS = ["full", "conv1d", "no_depthwise", "no_pointwise", "no_batchnorm"]
# ------------------------------------------------------------------------------------------------ #
#                                          MODES                                                   #
# ------------------------------------------------------------------------------------------------ #
MODES = ["prod", "dev", "test"]
