#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/harness/__init__.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 06:21:59 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Leave-one-subject-out protocols, metrics, reports and the command line."""
from drowsy_lab.harness.metrics import Confusion, Scores, confusion, metrics  # noqa: F401
from drowsy_lab.harness.protocol import (  # noqa: F401
    BalancedLOSO,
    BaselineLOSO,
    UnbalancedLOSO,
    VariantSweep,
    evaluate_baseline,
    evaluate_loso_balanced,
    evaluate_loso_unbalanced,
    evaluate_variants,
)
from drowsy_lab.harness.report import EvalReport, FoldResult, aggregate  # noqa: F401
