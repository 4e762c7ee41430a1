#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/training/optimizer.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 07:54:56 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Adam Optimizer"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from drowsy_lab.model.config import TENSORS, ModelParams


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class AdamState:
    """Adam hyperparameters and moment estimates. Moments are None before the first step."""

    eta: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    adam_eps: float = 1e-8
    step_count: int = 0
    first_moment: Optional[ModelParams] = None
    second_moment: Optional[ModelParams] = None

    @classmethod
    def from_dict(cls, config: Optional[dict]) -> AdamState:
        keys = ("eta", "beta1", "beta2", "adam_eps")
        return cls(**{k: float(v) for k, v in (config or {}).items() if k in keys})


# ------------------------------------------------------------------------------------------------ #
def adam_step(
    params: ModelParams, grads: ModelParams, state: AdamState
) -> Tuple[ModelParams, AdamState]:
    """One bias-corrected Adam update. Neither input is modified."""
    m = params.zeros_like() if state.first_moment is None else state.first_moment
    v = params.zeros_like() if state.second_moment is None else state.second_moment
    step = state.step_count + 1
    correction1 = 1.0 - state.beta1**step
    correction2 = 1.0 - state.beta2**step

    updated, first, second = {}, {}, {}
    for name in TENSORS:
        g = getattr(grads, name)
        first[name] = state.beta1 * getattr(m, name) + (1.0 - state.beta1) * g
        second[name] = state.beta2 * getattr(v, name) + (1.0 - state.beta2) * g * g
        m_hat = first[name] / correction1
        v_hat = second[name] / correction2
        step_size = state.eta * m_hat / (np.sqrt(v_hat) + state.adam_eps)
        updated[name] = getattr(params, name) - step_size

    new_state = replace(
        state,
        step_count=step,
        first_moment=ModelParams(**first),
        second_moment=ModelParams(**second),
    )
    return ModelParams(**updated), new_state
