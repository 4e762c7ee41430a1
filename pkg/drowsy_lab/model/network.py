#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/model/network.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 02:19:41 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Interpretable Separable-Convolution Network and its Ablation Variants"""
import logging
from typing import Tuple

import numpy as np

from drowsy_lab.core.exceptions import ShapeError
from drowsy_lab.model.config import ForwardCache, ModelConfig, ModelParams
from drowsy_lab.model.layers import (
    batchnorm_forward,
    conv1d_forward,
    depthwise_forward,
    head_forward,
    pointwise_forward,
    relu,
)

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def forward(
    X: np.ndarray,
    params: ModelParams,
    config: ModelConfig,
    stats: Tuple[np.ndarray, np.ndarray] = None,
) -> ForwardCache:
    """Runs the network on a batch and caches every intermediate activation.

    ``stats`` replaces the batch norm statistics of X, typically with the ``bn_mean`` and
    ``bn_var`` of a reference batch's cache. Variants without batch norm ignore it.

    full          pointwise, depthwise, ReLU, batch norm, GAP, dense, softmax
    no_batchnorm  as full without the batch norm
    conv1d        one standard convolution over all channels replaces pointwise and depthwise
    no_pointwise  depthwise on the raw channels, two nodes per channel
    no_depthwise  GAP over ReLU(batch norm(pointwise output))
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 3 or X.shape[1:] != (config.m, config.n):
        msg = f"Expected input of shape (batch, {config.m}, {config.n}), got {X.shape}."
        logger.error(msg)
        raise ShapeError(msg)

    h1 = pointwise_forward(X, params.W1, params.b1) if config.has_pointwise else None
    bn_mean = bn_var = None

    if config.variant == "no_depthwise":
        h2 = None
        normed, bn_mean, bn_var = batchnorm_forward(
            h1, params.gamma, params.beta, config.bn_epsilon, stats
        )
        h3 = relu(normed)
        h4 = h3
    else:
        if config.variant == "conv1d":
            h2 = conv1d_forward(X, params.W2, params.b2)
        elif config.variant == "no_pointwise":
            h2 = depthwise_forward(X, params.W2, params.b2)
        else:
            h2 = depthwise_forward(h1, params.W2, params.b2)
        h3 = relu(h2)
        if config.has_batchnorm:
            h4, bn_mean, bn_var = batchnorm_forward(
                h3, params.gamma, params.beta, config.bn_epsilon, stats
            )
        else:
            h4 = h3

    h5, h6, h7 = head_forward(h4, params.W6, params.b6)
    return ForwardCache(
        x=X, h1=h1, h2=h2, h3=h3, h4=h4, bn_mean=bn_mean, bn_var=bn_var, h5=h5, h6=h6, h7=h7
    )


# ------------------------------------------------------------------------------------------------ #
def predict_proba(
    X: np.ndarray, params: ModelParams, config: ModelConfig, batch_size: int = None
) -> np.ndarray:
    """Class likelihoods. Batch statistics are computed per chunk of ``batch_size`` samples,
    or over all of X when batch_size is None."""
    X = np.asarray(X, dtype=np.float64)
    if batch_size is None or batch_size >= len(X):
        return forward(X, params, config).h7
    chunks = [
        forward(X[start : start + batch_size], params, config).h7
        for start in range(0, len(X), batch_size)
    ]
    return np.concatenate(chunks, axis=0)


def predict(
    X: np.ndarray, params: ModelParams, config: ModelConfig, batch_size: int = None
) -> np.ndarray:
    return np.argmax(predict_proba(X, params, config, batch_size), axis=1)
