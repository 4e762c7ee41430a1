#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/core/service/io.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 06:58:42 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""IO Utils"""
from abc import ABC, abstractmethod
import json
import os
import logging
from typing import Any, List, Union

import yaml
import numpy as np
import pandas as pd
import scipy.io

# ------------------------------------------------------------------------------------------------ #


class IO(ABC):  # pragma: no cover

    _logger = logging.getLogger(
        f"{__module__}.{__name__}",
    )

    @classmethod
    def read(cls, filepath: str, *args, **kwargs) -> Any:
        data = cls._read(filepath, **kwargs)
        return data

    @classmethod
    @abstractmethod
    def _read(cls, filepath: str, **kwargs) -> Any:
        pass

    @classmethod
    def write(cls, filepath: str, data: Any, *args, **kwargs) -> None:
        dirname = os.path.dirname(filepath)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        cls._write(filepath, data, **kwargs)

    @classmethod
    @abstractmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        pass


# ------------------------------------------------------------------------------------------------ #
#                                        CSV IO                                                    #
# ------------------------------------------------------------------------------------------------ #


class CSVIO(IO):
    @classmethod
    def _read(
        cls,
        filepath: str,
        header: Union[int, None] = 0,
        dtype: dict = None,
        **kwargs,
    ) -> pd.DataFrame:
        return pd.read_csv(filepath, header=header, dtype=dtype, encoding="utf-8")

    @classmethod
    def _write(
        cls,
        filepath: str,
        data: pd.DataFrame,
        sep: str = ",",
        index: bool = False,
        header: Union[bool, List[str]] = True,
        float_format: str = None,
        encoding: str = "utf-8",
        **kwargs,
    ) -> None:
        data.to_csv(
            filepath,
            sep=sep,
            index=index,
            header=header,
            float_format=float_format,
            encoding=encoding,
            lineterminator="\n",
        )


# ------------------------------------------------------------------------------------------------ #
#                                        YAML IO                                                   #
# ------------------------------------------------------------------------------------------------ #


class YamlIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> dict:
        with open(filepath, "r", encoding="utf-8") as f:
            try:
                return yaml.safe_load(f)
            except yaml.YAMLError as e:  # pragma: no cover
                cls._logger.error(e)
                raise IOError(e)

    @classmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        with open(filepath, "w", encoding="utf-8") as f:
            try:
                yaml.safe_dump(data, f, sort_keys=False, default_flow_style=False)
            except yaml.YAMLError as e:  # pragma: no cover
                cls._logger.error(e)
                raise IOError(e)


# ------------------------------------------------------------------------------------------------ #
#                                        JSON IO                                                   #
# ------------------------------------------------------------------------------------------------ #


class JsonIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> Any:
        with open(filepath, "r", encoding="utf-8") as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as e:
                cls._logger.error(e)
                raise IOError(e)

    @classmethod
    def _write(cls, filepath: str, data: Any, indent: int = 2, **kwargs) -> None:
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=indent, sort_keys=True, allow_nan=True)
            f.write("\n")


# ------------------------------------------------------------------------------------------------ #
#                                       BINARY IO                                                  #
# ------------------------------------------------------------------------------------------------ #


class BinaryIO(IO):
    """Raw bytes. Domain codecs (EEGB containers, weight checkpoints) encode and decode."""

    @classmethod
    def _read(cls, filepath: str, **kwargs) -> bytes:
        with open(filepath, "rb") as f:
            return f.read()

    @classmethod
    def _write(cls, filepath: str, data: bytes, **kwargs) -> None:
        with open(filepath, "wb") as f:
            f.write(data)


# ------------------------------------------------------------------------------------------------ #
#                                       MATLAB IO                                                  #
# ------------------------------------------------------------------------------------------------ #


class MatIO(IO):
    """Read-only access to MATLAB files such as the published drowsiness arrays."""

    @classmethod
    def _read(cls, filepath: str, **kwargs) -> dict:
        try:
            return scipy.io.loadmat(filepath, squeeze_me=False)
        except (ValueError, NotImplementedError) as e:
            cls._logger.error(e)
            raise IOError(e)

    @classmethod
    def _write(cls, filepath: str, data: dict, **kwargs) -> None:
        scipy.io.savemat(filepath, {k: np.asarray(v) for k, v in data.items()})


# ------------------------------------------------------------------------------------------------ #
#                                       FIGURE IO                                                  #
# ------------------------------------------------------------------------------------------------ #


class FigureIO(IO):
    """Writes matplotlib figures. The output format follows the file extension."""

    @classmethod
    def _read(cls, filepath: str, **kwargs) -> str:
        with open(filepath, "r", encoding="utf-8") as f:
            return f.read()

    @classmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        # A fixed date keeps repeated renders byte-identical.
        metadata = {"Date": None} if filepath.lower().endswith(".svg") else None
        data.savefig(filepath, metadata=metadata, bbox_inches="tight")


# ------------------------------------------------------------------------------------------------ #
#                                       IO SERVICE                                                 #
# ------------------------------------------------------------------------------------------------ #
class IOService:

    __io = {
        "csv": CSVIO,
        "yaml": YamlIO,
        "yml": YamlIO,
        "json": JsonIO,
        "eegb": BinaryIO,
        "ckpt": BinaryIO,
        "bin": BinaryIO,
        "mat": MatIO,
        "svg": FigureIO,
        "png": FigureIO,
    }
    _logger = logging.getLogger(
        f"{__module__}.{__name__}",
    )

    @classmethod
    def read(cls, filepath: str, **kwargs) -> Any:
        io = cls._get_io(filepath)
        return io.read(filepath, **kwargs)

    @classmethod
    def write(cls, filepath: str, data: Any, **kwargs) -> None:
        io = cls._get_io(filepath)
        io.write(filepath=filepath, data=data, **kwargs)

    @classmethod
    def _get_io(cls, filepath: str) -> IO:
        if filepath is None:
            msg = "No file path was given."
            cls._logger.error(msg)
            raise ValueError(msg)
        file_format = os.path.splitext(str(filepath))[1].replace(".", "").lower()
        try:
            return IOService.__io[file_format]
        except KeyError:
            msg = (
                f"Unsupported file type {file_format!r}; "
                f"expected one of {sorted(IOService.__io)}."
            )
            cls._logger.error(msg)
            raise ValueError(msg)
