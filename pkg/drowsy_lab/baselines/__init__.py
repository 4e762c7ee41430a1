#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/baselines/__init__.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 04:31:49 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Conventional spectral and entropy features with closed-form classifiers."""
from drowsy_lab.baselines.classifier import CLASSIFIERS, fit_classifier, predict  # noqa: F401
from drowsy_lab.baselines.entropy import (  # noqa: F401
    approximate_entropy,
    four_entropies,
    fuzzy_entropy,
    sample_entropy,
    spectral_entropy,
)
from drowsy_lab.baselines.features import (  # noqa: F401
    EXTRACTORS,
    export_features_csv,
    extract_features,
)
from drowsy_lab.baselines.spectral import (  # noqa: F401
    band_powers,
    log_power,
    power_ratios,
    relative_power,
    wavelet_entropy,
    welch_psd,
)
