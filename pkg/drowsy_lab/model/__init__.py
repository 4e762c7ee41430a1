#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/model/__init__.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 07:41:39 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Forward computation of the interpretable separable-convolution network and its variants."""
from drowsy_lab.model.checkpoint import load_checkpoint, save_checkpoint  # noqa: F401
from drowsy_lab.model.config import (  # noqa: F401
    ForwardCache,
    ModelConfig,
    ModelParams,
    init_params,
)
from drowsy_lab.model.layers import (  # noqa: F401
    batchnorm_forward,
    depthwise_forward,
    head_forward,
    pointwise_forward,
)
from drowsy_lab.model.network import forward, predict, predict_proba  # noqa: F401
