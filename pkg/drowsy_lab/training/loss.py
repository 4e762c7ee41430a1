#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/training/loss.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 06:47:43 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Softmax Cross-Entropy Loss"""
import numpy as np
from scipy.special import logsumexp


# ------------------------------------------------------------------------------------------------ #
def cross_entropy_loss(h7: np.ndarray, labels: np.ndarray, h6: np.ndarray = None) -> float:
    """Mean negative log-likelihood of the labels.

    When the logits ``h6`` are given the loss is evaluated in log-sum-exp form from them,
    which stays finite for saturated softmax outputs.
    """
    labels = np.asarray(labels, dtype=np.int64)
    rows = np.arange(len(labels))
    if h6 is not None:
        h6 = np.asarray(h6, dtype=np.float64)
        return float(np.mean(logsumexp(h6, axis=1) - h6[rows, labels]))
    h7 = np.asarray(h7, dtype=np.float64)
    return float(-np.mean(np.log(h7[rows, labels])))


def accuracy(h7: np.ndarray, labels: np.ndarray) -> float:
    return float(np.mean(np.argmax(h7, axis=1) == np.asarray(labels)))
