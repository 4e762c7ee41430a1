#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/model/config.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 09:55:15 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Model Configuration, Parameters and Forward Cache"""
from __future__ import annotations

from dataclasses import asdict, dataclass, fields
import logging
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from drowsy_lab import N_CHANNELS, N_POINTS, VARIANTS

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
TENSORS = ("W1", "b1", "W2", "b2", "gamma", "beta", "W6", "b6")
N_CLASSES = 2


# ------------------------------------------------------------------------------------------------ #
#                                      MODEL CONFIG                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class ModelConfig:
    """Network geometry and architecture variant.

    Args:
        m (int): Input channels.
        n (int): Input length in samples.
        n1 (int): Pointwise filters. The depthwise stage has two nodes per filter.
        l (int): Depthwise kernel length.
        variant (str): One of 'full', 'conv1d', 'no_depthwise', 'no_pointwise', 'no_batchnorm'.
        bn_epsilon (float): Variance floor of the batch normalization.
    """

    m: int = N_CHANNELS
    n: int = N_POINTS
    n1: int = 16
    l: int = 64  # noqa: E741
    variant: str = "full"
    bn_epsilon: float = 1e-5

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            self._fail(f"Expected variant to be one of {VARIANTS}, got {self.variant!r}.")
        if self.m < 1 or self.n1 < 1 or self.l < 1:
            self._fail(f"m, n1 and l must be positive, got {self.m}, {self.n1}, {self.l}.")
        if self.l > self.n:
            self._fail(f"Kernel length {self.l} exceeds the input length {self.n}.")
        if not self.bn_epsilon > 0:
            self._fail(f"bn_epsilon must be positive, got {self.bn_epsilon}.")

    # -------------------------------------------------------------------------------------------- #
    @property
    def t(self) -> int:
        """Output length of a valid cross-correlation with the depthwise kernel."""
        return self.n - self.l + 1

    @property
    def has_pointwise(self) -> bool:
        return self.variant in ("full", "no_batchnorm", "no_depthwise")

    @property
    def has_depthwise(self) -> bool:
        return self.variant != "no_depthwise"

    @property
    def has_batchnorm(self) -> bool:
        return self.variant != "no_batchnorm"

    @property
    def n_features(self) -> int:
        """Channels entering the global average pooling."""
        if self.variant == "no_depthwise":
            return self.n1
        if self.variant == "no_pointwise":
            return 2 * self.m
        return 2 * self.n1

    @property
    def feature_length(self) -> int:
        return self.t if self.has_depthwise else self.n

    def shapes(self) -> Dict[str, Tuple[int, ...]]:
        """Tensor shapes of the variant. Absent tensors have shape (0,)."""
        k = self.n_features
        shapes = {name: (0,) for name in TENSORS}
        if self.has_pointwise:
            shapes.update(W1=(self.n1, self.m), b1=(self.n1,))
        if self.variant == "conv1d":
            shapes.update(W2=(k, self.m, self.l), b2=(k,))
        elif self.has_depthwise:
            shapes.update(W2=(k, self.l), b2=(k,))
        if self.has_batchnorm:
            shapes.update(gamma=(k,), beta=(k,))
        shapes.update(W6=(k, N_CLASSES), b6=(N_CLASSES,))
        return shapes

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, config: Optional[dict]) -> ModelConfig:
        """Builds a config from a mapping, ignoring unknown keys."""
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in (config or {}).items() if k in names})

    def _fail(self, msg: str) -> None:
        logger.error(msg)
        raise ValueError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                      MODEL PARAMS                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class ModelParams:
    """Learnable tensors. Gradients and Adam moments share this container."""

    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray
    gamma: np.ndarray
    beta: np.ndarray
    W6: np.ndarray
    b6: np.ndarray

    def items(self):
        return [(name, getattr(self, name)) for name in TENSORS]

    def map(self, fn: Callable[[np.ndarray], np.ndarray]) -> ModelParams:
        return ModelParams(**{name: fn(tensor) for name, tensor in self.items()})

    def copy(self) -> ModelParams:
        return self.map(np.copy)

    def zeros_like(self) -> ModelParams:
        return self.map(np.zeros_like)

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(tensor)) for _, tensor in self.items())

    def shapes(self) -> Dict[str, Tuple[int, ...]]:
        return {name: tensor.shape for name, tensor in self.items()}

    def norm(self) -> float:
        return float(np.sqrt(sum(np.sum(tensor**2) for _, tensor in self.items())))


# ------------------------------------------------------------------------------------------------ #
#                                     FORWARD CACHE                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class ForwardCache:
    """Activations of one forward pass.

    h2 is None for the no_depthwise variant, bn_mean and bn_var are None without batch
    normalization. h3 is always the post-ReLU tensor and h4 the tensor pooled by GAP.
    """

    x: np.ndarray
    h1: Optional[np.ndarray]
    h2: Optional[np.ndarray]
    h3: np.ndarray
    h4: np.ndarray
    bn_mean: Optional[np.ndarray]
    bn_var: Optional[np.ndarray]
    h5: np.ndarray
    h6: np.ndarray
    h7: np.ndarray

    @property
    def batch_size(self) -> int:
        return self.x.shape[0]


# ------------------------------------------------------------------------------------------------ #
def init_params(config: ModelConfig, seed) -> ModelParams:
    """Draws every weight uniformly in +/- sqrt(6 / fan_in); biases and beta zero, gamma one.

    Weights are drawn in the order W1, W2, W6 from ``np.random.default_rng(seed)``.
    """
    rng = np.random.default_rng(seed)
    shapes = config.shapes()
    tensors = {name: np.zeros(shape) for name, shape in shapes.items()}
    for name in ("W1", "W2", "W6"):
        shape = shapes[name]
        if shape == (0,):
            continue
        fan_in = int(np.prod(shape[1:])) if name != "W6" else shape[0]
        bound = np.sqrt(6.0 / fan_in)
        tensors[name] = rng.uniform(-bound, bound, size=shape)
    if config.has_batchnorm:
        tensors["gamma"] = np.ones(shapes["gamma"])
    return ModelParams(**tensors)
