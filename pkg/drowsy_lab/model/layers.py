#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/model/layers.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 01:12:28 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Layer Forward Computations

Indexing is 0-based throughout: depthwise node i reads pointwise output i // 2.
Reductions use einsum without BLAS so results do not depend on thread counts.
"""
import logging
from typing import Tuple

import numpy as np
from scipy.special import softmax

from drowsy_lab.core.exceptions import ShapeError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def pointwise_forward(X: np.ndarray, W1: np.ndarray, b1: np.ndarray) -> np.ndarray:
    """Spatial filtering: h1[b, i, j] = sum_p W1[i, p] X[b, p, j] + b1[i]."""
    _check(X.ndim == 3 and W1.ndim == 2 and X.shape[1] == W1.shape[1], X, W1, "pointwise")
    _check(b1.shape == (W1.shape[0],), b1, W1, "pointwise bias")
    return np.einsum("ip,bpj->bij", W1, X) + b1[None, :, None]


# ------------------------------------------------------------------------------------------------ #
def depthwise_sources(n_nodes: int) -> np.ndarray:
    """Input channel of every depthwise node."""
    return np.arange(n_nodes) // 2


def depthwise_forward(H1: np.ndarray, W2: np.ndarray, b2: np.ndarray) -> np.ndarray:
    """Two temporal kernels per input channel, valid cross-correlation.

    h2[b, i, j] = sum_r W2[i, r] H1[b, i // 2, j + r] + b2[i]
    """
    _check(H1.ndim == 3 and W2.ndim == 2 and W2.shape[0] == 2 * H1.shape[1], H1, W2, "depthwise")
    _check(b2.shape == (W2.shape[0],) and W2.shape[1] <= H1.shape[2], b2, W2, "depthwise bias")
    length = W2.shape[1]
    t = H1.shape[2] - length + 1
    source = H1[:, depthwise_sources(W2.shape[0]), :]
    H2 = np.zeros((H1.shape[0], W2.shape[0], t))
    for r in range(length):
        H2 += W2[None, :, r, None] * source[:, :, r : r + t]
    return H2 + b2[None, :, None]


# ------------------------------------------------------------------------------------------------ #
def conv1d_forward(X: np.ndarray, K: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Temporal convolution over all channels: out[b, f, j] = sum_p,r K[f,p,r] X[b,p,j+r]."""
    _check(X.ndim == 3 and K.ndim == 3 and K.shape[1] == X.shape[1], X, K, "conv1d")
    _check(b.shape == (K.shape[0],) and K.shape[2] <= X.shape[2], b, K, "conv1d bias")
    t = X.shape[2] - K.shape[2] + 1
    out = np.zeros((X.shape[0], K.shape[0], t))
    for r in range(K.shape[2]):
        out += np.einsum("fp,bpj->bfj", K[:, :, r], X[:, :, r : r + t])
    return out + b[None, :, None]


# ------------------------------------------------------------------------------------------------ #
def relu(H: np.ndarray) -> np.ndarray:
    return np.maximum(H, 0.0)


# ------------------------------------------------------------------------------------------------ #
def batchnorm_forward(
    H: np.ndarray,
    gamma: np.ndarray,
    beta: np.ndarray,
    eps: float = 1e-5,
    stats: Tuple[np.ndarray, np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Normalizes every channel with the statistics of the current batch.

    Mean and biased variance run over the batch and time axes. No running averages are
    kept, so inference on a single sample normalizes over that sample's time axis and
    every channel then pools to beta. Passing ``stats`` (mean, variance) taken from a
    reference batch normalizes H with those instead.

    Returns:
        Tuple of (output, mean, variance).
    """
    _check(gamma.shape == beta.shape == (H.shape[1],), H, gamma, "batchnorm")
    if stats is None:
        mean = H.mean(axis=(0, 2))
        var = H.var(axis=(0, 2))
    else:
        mean, var = (np.asarray(s, dtype=np.float64) for s in stats)
        _check(mean.shape == var.shape == gamma.shape, H, mean, "batchnorm statistics")
    xhat = (H - mean[None, :, None]) / np.sqrt(var + eps)[None, :, None]
    return gamma[None, :, None] * xhat + beta[None, :, None], mean, var


# ------------------------------------------------------------------------------------------------ #
def head_forward(
    H4: np.ndarray, W6: np.ndarray, b6: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Global average pooling, dense layer and softmax. Class 0 is alert, 1 drowsy."""
    _check(W6.ndim == 2 and W6.shape[0] == H4.shape[1], H4, W6, "dense")
    h5 = H4.mean(axis=2)
    h6 = np.einsum("bi,ic->bc", h5, W6) + b6[None, :]
    h7 = softmax(h6, axis=1)
    return h5, h6, h7


# ------------------------------------------------------------------------------------------------ #
def _check(ok: bool, a: np.ndarray, b: np.ndarray, layer: str) -> None:
    if not ok:
        msg = f"Shape mismatch in {layer} layer: {a.shape} vs {b.shape}."
        logger.error(msg)
        raise ShapeError(msg)
