#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/interpret/__init__.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 03:13:37 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Class activation mapping, back-tracing and Gaussian heatmaps for single samples."""
from drowsy_lab.interpret.cam import (  # noqa: F401
    ActivationMap,
    DiscriminativeLocation,
    class_activation_map,
    top_locations,
    trace_location,
)
from drowsy_lab.interpret.heatmap import Heatmap, build_heatmap, interpret_sample  # noqa: F401
from drowsy_lab.interpret.render import export_heatmap  # noqa: F401
