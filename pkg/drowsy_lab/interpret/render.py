#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/interpret/render.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 06:34:26 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Heatmap Export: CSV matrix, SVG rendering and JSON sidecar"""
import logging
import os
from typing import Dict, Sequence, Type

import matplotlib
from matplotlib.collections import LineCollection
from matplotlib.colors import Normalize
from matplotlib.figure import Figure
import numpy as np
import pandas as pd

from drowsy_lab import CHANNEL_NAMES, LABELS, RATE_HZ
from drowsy_lab.core.service.io import IOService
from drowsy_lab.interpret.heatmap import Interpretation

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
COLORMAP = "RdBu_r"
# Fixed salt makes the SVG element ids, and so the files, reproducible.
matplotlib.rcParams["svg.hashsalt"] = "drowsy_lab"


# ------------------------------------------------------------------------------------------------ #
def render_heatmap(
    interpretation: Interpretation,
    X: np.ndarray,
    channel_names: Sequence[str] = CHANNEL_NAMES,
    title: str = None,
):
    """Draws the signal traces coloured by the heatmap beside the per-channel summary."""
    heatmap = interpretation.heatmap
    X = np.asarray(X, dtype=np.float64)
    channels, length = X.shape
    t = np.arange(length) / RATE_HZ
    spread = np.ptp(X, axis=1).max() or 1.0
    offsets = spread * np.arange(channels)[::-1]

    fig = Figure(figsize=(14, 10))
    ax_signal, ax_summary = fig.subplots(1, 2, gridspec_kw={"width_ratios": [5, 1]})
    norm = Normalize(-1.0, 1.0)
    for p in range(channels):
        y = X[p] - X[p].mean() + offsets[p]
        points = np.column_stack([t, y]).reshape(-1, 1, 2)
        segments = np.concatenate([points[:-1], points[1:]], axis=1)
        lines = LineCollection(segments, cmap=COLORMAP, norm=norm, linewidths=0.8)
        lines.set_array(heatmap.map[p, :-1])
        ax_signal.add_collection(lines)
    ax_signal.set_xlim(t[0], t[-1])
    ax_signal.set_ylim(-spread, offsets[0] + spread)
    ax_signal.set_yticks(offsets)
    ax_signal.set_yticklabels(channel_names[:channels])
    ax_signal.set_xlabel("Time (s)")
    fig.colorbar(lines, ax=ax_signal, fraction=0.02, pad=0.01)

    ax_summary.barh(
        np.arange(channels)[::-1],
        heatmap.channel_summary,
        color=matplotlib.colormaps[COLORMAP](norm(heatmap.channel_summary)),
    )
    ax_summary.set_yticks(np.arange(channels)[::-1])
    ax_summary.set_yticklabels(channel_names[:channels])
    ax_summary.set_xlim(-1.0, 1.0)
    ax_summary.set_xlabel("Channel mean")

    likelihood = float(interpretation.likelihoods[interpretation.predicted])
    fig.suptitle(
        title or f"Predicted {LABELS[interpretation.predicted]} (p={likelihood:.3f})"
    )
    return fig


# ------------------------------------------------------------------------------------------------ #
def export_heatmap(
    interpretation: Interpretation,
    X: np.ndarray,
    out_dir: str,
    stem: str,
    subject: int = None,
    label: int = None,
    io: Type[IOService] = IOService,
) -> Dict[str, str]:
    """Writes <stem>.csv (channels x points), <stem>.svg and <stem>.json into ``out_dir``.

    Returns:
        Mapping of artifact type to the written path.
    """
    heatmap = interpretation.heatmap
    paths = {ext: os.path.join(out_dir, f"{stem}.{ext}") for ext in ("csv", "svg", "json")}

    io.write(paths["csv"], pd.DataFrame(heatmap.map), header=False, float_format="%.8f")
    io.write(paths["svg"], render_heatmap(interpretation, X))
    sidecar = {
        "subject": subject,
        "label": label,
        "class": interpretation.predicted,
        "likelihoods": [float(v) for v in interpretation.likelihoods],
        "degenerate": heatmap.degenerate,
        "sigma": heatmap.sigma,
        "top_locations": [location.as_dict() for location in heatmap.locations],
        "channel_summary": [float(v) for v in heatmap.channel_summary],
    }
    io.write(paths["json"], sidecar)
    logger.info(f"Exported heatmap {stem} to {out_dir}.")
    return paths
