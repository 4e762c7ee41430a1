#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/model/checkpoint.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 08:48:52 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Weight Checkpoint Codec

A u32 little-endian header length, a UTF-8 JSON header with sorted keys
{config, seed, epoch, shapes}, then the tensors as little-endian f32 in the order
W1, b1, W2, b2, gamma, beta, W6, b6. Absent tensors of a variant have zero length.
"""
import json
import logging
import struct
from typing import Tuple, Type

import numpy as np

from drowsy_lab.core.exceptions import ContainerFormatError, TruncatedPayloadError
from drowsy_lab.core.service.io import IOService
from drowsy_lab.model.config import TENSORS, ModelConfig, ModelParams

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
LENGTH = struct.Struct("<I")
FLOAT = np.dtype("<f4")


# ------------------------------------------------------------------------------------------------ #
def encode_checkpoint(params: ModelParams, config: ModelConfig, seed: int, epoch: int) -> bytes:
    header = {
        "config": config.to_dict(),
        "seed": seed,
        "epoch": epoch,
        "shapes": {name: list(tensor.shape) for name, tensor in params.items()},
    }
    text = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")
    body = b"".join(np.ascontiguousarray(t, dtype=FLOAT).tobytes() for _, t in params.items())
    return LENGTH.pack(len(text)) + text + body


def decode_checkpoint(data: bytes) -> Tuple[ModelParams, ModelConfig, int, int]:
    if len(data) < LENGTH.size:
        _fail(TruncatedPayloadError, "Checkpoint ends inside the header length.")
    (length,) = LENGTH.unpack_from(data)
    if len(data) < LENGTH.size + length:
        _fail(TruncatedPayloadError, "Checkpoint header is truncated.")
    try:
        header = json.loads(data[LENGTH.size : LENGTH.size + length].decode("utf-8"))
        config = ModelConfig.from_dict(header["config"])
        shapes = {name: tuple(header["shapes"][name]) for name in TENSORS}
    except (UnicodeDecodeError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        _fail(ContainerFormatError, f"Malformed checkpoint header: {e}")

    expected = config.shapes()
    if shapes != expected:
        _fail(ContainerFormatError, f"Tensor shapes {shapes} do not fit the config {expected}.")

    offset = LENGTH.size + length
    tensors = {}
    for name in TENSORS:
        count = int(np.prod(shapes[name]))
        if len(data) < offset + count * FLOAT.itemsize:
            _fail(TruncatedPayloadError, f"Checkpoint ends inside tensor {name}.")
        flat = np.frombuffer(data, dtype=FLOAT, count=count, offset=offset)
        tensors[name] = flat.astype(np.float64).reshape(shapes[name])
        offset += count * FLOAT.itemsize
    if offset != len(data):
        _fail(ContainerFormatError, f"{len(data) - offset} trailing bytes after the tensors.")
    return ModelParams(**tensors), config, header.get("seed"), header.get("epoch")


# ------------------------------------------------------------------------------------------------ #
def save_checkpoint(
    params: ModelParams,
    config: ModelConfig,
    seed: int,
    epoch: int,
    path: str,
    io: Type[IOService] = IOService,
) -> None:
    io.write(path, encode_checkpoint(params, config, seed, epoch))
    logger.info(f"Saved {config.variant} checkpoint of epoch {epoch} to {path}.")


def load_checkpoint(
    path: str, io: Type[IOService] = IOService
) -> Tuple[ModelParams, ModelConfig, int, int]:
    """Returns (params, config, seed, epoch). Tensors are widened to float64."""
    return decode_checkpoint(io.read(path))


# ------------------------------------------------------------------------------------------------ #
def _fail(error: Type[ContainerFormatError], msg: str) -> None:
    logger.error(msg)
    raise error(msg)
