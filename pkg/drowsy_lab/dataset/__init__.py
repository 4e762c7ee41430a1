#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/__init__.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 08:22:18 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Ingest, label, balance, split, synthesize and persist EEG sample collections."""
from drowsy_lab.dataset.container import (  # noqa: F401
    export_container,
    export_metadata_csv,
    import_container,
)
from drowsy_lab.dataset.entity import DatasetBundle, EegSample, Trial  # noqa: F401
from drowsy_lab.dataset.labeling import (  # noqa: F401
    alert_rt,
    compute_global_rt,
    label_by_reaction_time,
)
from drowsy_lab.dataset.published import (  # noqa: F401
    PUBLISHED_COUNTS,
    bundle_stats,
    import_published,
)
from drowsy_lab.dataset.selection import (  # noqa: F401
    LeaveOneSubjectOut,
    build_balanced,
    filter_and_select_sessions,
    group_by_session,
    loso_split,
)
from drowsy_lab.dataset.synthetic import (  # noqa: F401
    SpindleEvent,
    inject_spindle,
    synth_generate,
    synth_generate_with_events,
)
