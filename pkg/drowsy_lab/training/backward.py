#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/training/backward.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 04:33:17 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Exact Gradients of the Mean Cross-Entropy

Batch normalization uses batch statistics, so its gradient includes the dependence of
the mean and variance on every input of the batch.
"""
from typing import Tuple

import numpy as np

from drowsy_lab.model.config import ForwardCache, ModelConfig, ModelParams
from drowsy_lab.model.layers import depthwise_sources


# ------------------------------------------------------------------------------------------------ #
def backward(
    cache: ForwardCache, labels: np.ndarray, params: ModelParams, config: ModelConfig
) -> ModelParams:
    """Returns the gradients of the mean cross-entropy, shaped like ``params``."""
    grads = params.zeros_like()
    labels = np.asarray(labels, dtype=np.int64)
    batch = cache.batch_size
    onehot = np.zeros_like(cache.h7)
    onehot[np.arange(batch), labels] = 1.0

    # Softmax and dense layer.
    dh6 = (cache.h7 - onehot) / batch
    grads.W6 = np.einsum("bi,bc->ic", cache.h5, dh6)
    grads.b6 = dh6.sum(axis=0)
    dh5 = np.einsum("bc,ic->bi", dh6, params.W6)

    # Global average pooling.
    length = cache.h4.shape[2]
    dh4 = np.repeat(dh5[:, :, None] / length, length, axis=2)

    if config.variant == "no_depthwise":
        dnormed = dh4 * (cache.h3 > 0)
        dh1, grads.gamma, grads.beta = batchnorm_backward(
            dnormed, cache.h1, cache.bn_mean, cache.bn_var, params.gamma, config.bn_epsilon
        )
        grads.W1, grads.b1 = pointwise_backward(dh1, cache.x)
        return grads

    if config.has_batchnorm:
        dh3, grads.gamma, grads.beta = batchnorm_backward(
            dh4, cache.h3, cache.bn_mean, cache.bn_var, params.gamma, config.bn_epsilon
        )
    else:
        dh3 = dh4
    dh2 = dh3 * (cache.h2 > 0)
    grads.b2 = dh2.sum(axis=(0, 2))

    if config.variant == "conv1d":
        grads.W2 = conv1d_weight_backward(dh2, cache.x, params.W2.shape[2])
    elif config.variant == "no_pointwise":
        grads.W2 = depthwise_weight_backward(dh2, cache.x, params.W2.shape[1])
    else:
        grads.W2 = depthwise_weight_backward(dh2, cache.h1, params.W2.shape[1])
        dh1 = depthwise_input_backward(dh2, params.W2, cache.h1.shape)
        grads.W1, grads.b1 = pointwise_backward(dh1, cache.x)
    return grads


# ------------------------------------------------------------------------------------------------ #
def batchnorm_backward(
    dout: np.ndarray,
    x: np.ndarray,
    mean: np.ndarray,
    var: np.ndarray,
    gamma: np.ndarray,
    eps: float,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns (dx, dgamma, dbeta) for batch normalization over axes (0, 2)."""
    inv_std = 1.0 / np.sqrt(var + eps)
    xhat = (x - mean[None, :, None]) * inv_std[None, :, None]
    dgamma = np.sum(dout * xhat, axis=(0, 2))
    dbeta = np.sum(dout, axis=(0, 2))
    dxhat = dout * gamma[None, :, None]
    count = x.shape[0] * x.shape[2]
    dx = (inv_std[None, :, None] / count) * (
        count * dxhat
        - np.sum(dxhat, axis=(0, 2))[None, :, None]
        - xhat * np.sum(dxhat * xhat, axis=(0, 2))[None, :, None]
    )
    return dx, dgamma, dbeta


# ------------------------------------------------------------------------------------------------ #
def depthwise_weight_backward(dh2: np.ndarray, source: np.ndarray, length: int) -> np.ndarray:
    t = dh2.shape[2]
    inputs = source[:, depthwise_sources(dh2.shape[1]), :]
    dW2 = np.empty((dh2.shape[1], length))
    for r in range(length):
        dW2[:, r] = np.einsum("bij,bij->i", dh2, inputs[:, :, r : r + t])
    return dW2


def depthwise_input_backward(dh2: np.ndarray, W2: np.ndarray, shape: tuple) -> np.ndarray:
    """Gradient with respect to the depthwise input; each input feeds nodes 2k and 2k + 1."""
    t = dh2.shape[2]
    dsource = np.zeros((shape[0], W2.shape[0], shape[2]))
    for r in range(W2.shape[1]):
        dsource[:, :, r : r + t] += W2[None, :, r, None] * dh2
    return dsource[:, 0::2, :] + dsource[:, 1::2, :]


def conv1d_weight_backward(dh2: np.ndarray, X: np.ndarray, length: int) -> np.ndarray:
    t = dh2.shape[2]
    dK = np.empty((dh2.shape[1], X.shape[1], length))
    for r in range(length):
        dK[:, :, r] = np.einsum("bfj,bpj->fp", dh2, X[:, :, r : r + t])
    return dK


def pointwise_backward(dh1: np.ndarray, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return np.einsum("bij,bpj->ip", dh1, X), dh1.sum(axis=(0, 2))
