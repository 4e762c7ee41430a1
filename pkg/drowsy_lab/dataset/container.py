#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/dataset/container.py                                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 09:29:31 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""EEGB v1 Container Codec

Layout: 4 byte magic ``EEGB``, u8 version, u32 little-endian header length, UTF-8 JSON
header, then one fixed-size record per sample in header order (u16 subject id, u8 label,
30 x 384 little-endian f32 microvolt values).
"""
import json
import logging
import struct
from typing import Type

import numpy as np
import pandas as pd

from drowsy_lab import CHANNEL_NAMES, LABELS, N_CHANNELS, N_POINTS, RATE_HZ
from drowsy_lab.core.exceptions import (
    ContainerFormatError,
    DataError,
    DimensionMismatchError,
    MagicMismatchError,
    TruncatedPayloadError,
)
from drowsy_lab.core.service.io import IOService
from drowsy_lab.dataset.entity import DatasetBundle, EegSample

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
MAGIC = b"EEGB"
MAX_SUBJECT_ID = np.iinfo(np.uint16).max
VERSION = 1
PREAMBLE = struct.Struct("<4sBI")


# ------------------------------------------------------------------------------------------------ #
def record_dtype(channels: int = N_CHANNELS, length: int = N_POINTS) -> np.dtype:
    return np.dtype([("subject", "<u2"), ("label", "u1"), ("signal", "<f4", (channels, length))])


# ------------------------------------------------------------------------------------------------ #
def encode(bundle: DatasetBundle) -> bytes:
    """Serializes a bundle into EEGB v1 bytes.

    Every sample must share one channel layout and carry a subject id that fits in 16 bits.
    """
    names = bundle[0].channel_names if len(bundle) else tuple(CHANNEL_NAMES)
    for sample in bundle:
        if sample.channel_names != names:
            _fail(
                DataError,
                f"Sample of subject {sample.subject_id} has channels {list(sample.channel_names)}, "
                f"expected the bundle layout {list(names)}.",
            )
        if not 0 <= sample.subject_id <= MAX_SUBJECT_ID:
            _fail(
                DataError,
                f"Subject id {sample.subject_id} does not fit the container's 16-bit subject "
                f"field (0..{MAX_SUBJECT_ID}).",
            )
    header = {
        "sample_count": len(bundle),
        "channels": N_CHANNELS,
        "length": N_POINTS,
        "rate_hz": RATE_HZ,
        "kind": bundle.kind,
        "channel_names": list(names),
        "subjects": [
            {"id": subject, "alert": alert, "drowsy": drowsy}
            for subject, (alert, drowsy) in bundle.per_subject_counts.items()
        ],
    }
    if len(bundle) and all(s.local_rt is not None for s in bundle):
        header["local_rt"] = [s.local_rt for s in bundle]
    if len(bundle) and all(s.session_id is not None for s in bundle):
        header["session_id"] = [s.session_id for s in bundle]

    text = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")
    records = np.empty(len(bundle), dtype=record_dtype())
    for i, sample in enumerate(bundle):
        records[i] = (sample.subject_id, sample.label, sample.signal)
    return PREAMBLE.pack(MAGIC, VERSION, len(text)) + text + records.tobytes()


# ------------------------------------------------------------------------------------------------ #
def decode(data: bytes) -> DatasetBundle:
    """Parses EEGB v1 bytes, raising a distinct ContainerFormatError subclass per defect."""
    if len(data) < len(MAGIC) or data[: len(MAGIC)] != MAGIC:
        if MAGIC.startswith(data):
            _fail(TruncatedPayloadError, f"File of {len(data)} bytes ends inside the magic.")
        _fail(MagicMismatchError, f"Expected magic {MAGIC!r}, found {data[:4]!r}.")
    if len(data) < PREAMBLE.size:
        _fail(TruncatedPayloadError, "File ends inside the preamble.")
    _, version, header_length = PREAMBLE.unpack_from(data)
    if version != VERSION:
        _fail(ContainerFormatError, f"Unsupported EEGB version {version}.")
    start = PREAMBLE.size + header_length
    if len(data) < start:
        _fail(TruncatedPayloadError, f"Header of {header_length} bytes is truncated.")
    try:
        header = json.loads(data[PREAMBLE.size : start].decode("utf-8"))
        count = int(header["sample_count"])
        channels, length = int(header["channels"]), int(header["length"])
        names = header["channel_names"]
    except (UnicodeDecodeError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        _fail(ContainerFormatError, f"Malformed EEGB header: {e}")

    if channels != N_CHANNELS or length != N_POINTS or len(names) != N_CHANNELS:
        _fail(
            DimensionMismatchError,
            f"Expected {N_CHANNELS} x {N_POINTS} with {N_CHANNELS} channel names, header "
            f"declares {channels} x {length} with {len(names)} names.",
        )
    dtype = record_dtype(channels, length)
    payload = len(data) - start
    if payload < count * dtype.itemsize:
        _fail(
            TruncatedPayloadError,
            f"Header declares {count} samples ({count * dtype.itemsize} bytes), "
            f"payload has {payload} bytes.",
        )
    if payload > count * dtype.itemsize:
        _fail(ContainerFormatError, f"{payload - count * dtype.itemsize} trailing bytes.")

    records = np.frombuffer(data, dtype=dtype, count=count, offset=start)
    if np.any(~np.isin(records["label"], list(LABELS))):
        _fail(ContainerFormatError, "Record label outside {0, 1}.")
    local_rts = header.get("local_rt") or [None] * count
    sessions = header.get("session_id") or [None] * count
    if len(local_rts) != count or len(sessions) != count:
        _fail(ContainerFormatError, "Per-sample header lists disagree with sample_count.")

    samples = [
        EegSample(
            subject_id=int(record["subject"]),
            signal=record["signal"],
            label=int(record["label"]),
            channel_names=names,
            local_rt=rt,
            session_id=session,
        )
        for record, rt, session in zip(records, local_rts, sessions)
    ]
    bundle = DatasetBundle(samples=samples, kind=header.get("kind", "unbalanced"))
    declared = {s["id"]: (s["alert"], s["drowsy"]) for s in header.get("subjects", [])}
    if declared != bundle.per_subject_counts:
        _fail(ContainerFormatError, "Header subject counts disagree with the records.")
    return bundle


# ------------------------------------------------------------------------------------------------ #
def import_container(path: str, io: Type[IOService] = IOService) -> DatasetBundle:
    bundle = decode(io.read(path))
    logger.info(f"Imported {bundle} from {path}.")
    return bundle


def export_container(bundle: DatasetBundle, path: str, io: Type[IOService] = IOService) -> None:
    io.write(path, encode(bundle))
    logger.info(f"Exported {bundle} to {path}.")


# ------------------------------------------------------------------------------------------------ #
def export_metadata_csv(bundle: DatasetBundle, path: str, io: Type[IOService] = IOService) -> None:
    """Writes one row per sample: subject, label and the sample's position in the bundle."""
    metadata = pd.DataFrame(
        {
            "subject": bundle.subject_ids(),
            "label": bundle.labels(),
            "index": np.arange(len(bundle)),
        }
    )
    io.write(path, metadata)


# ------------------------------------------------------------------------------------------------ #
def _fail(error: Type[DataError], msg: str) -> None:
    logger.error(msg)
    raise error(msg)
