#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/core/service/validation.py                                              #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 07:15:55 pm                                                 #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Validation Module."""
from abc import ABC, abstractmethod
import logging

from drowsy_lab import KINDS, LABELS


# ------------------------------------------------------------------------------------------------ #
#                                    VALIDATOR ABC DESCRIPTOR                                      #
# ------------------------------------------------------------------------------------------------ #
class Validator(ABC):
    """Abstract base class for validation descriptors."""

    def __set_name__(self, owner, name):
        self.property_name = name
        self.private_name = "_" + name
        self._logger = logging.getLogger(
            f"{owner.__module__}.{owner.__name__}",
        )

    def __get__(self, obj, objtype=None):
        if obj is None:
            return self
        return getattr(obj, self.private_name)

    def __set__(self, obj, value):
        self.validate(value)
        setattr(obj, self.private_name, value)

    @abstractmethod
    def validate(self, value):
        pass


# ------------------------------------------------------------------------------------------------ #
#                                    MEMBERSHIP VALIDATOR                                          #
# ------------------------------------------------------------------------------------------------ #
class OneOf(Validator):
    """Validates that a value belongs to a fixed collection of admissible values."""

    def __init__(self, options, kind: type) -> None:
        self._options = options
        self._kind = kind

    def validate(self, value) -> None:
        if value is None:
            msg = f"The {self.property_name!r} must not be None."
            self._logger.error(msg)
            raise ValueError(msg)

        if isinstance(value, bool) or not isinstance(value, self._kind):
            msg = f"The {self.property_name!r} must be of type {self._kind.__name__}."
            self._logger.error(msg)
            raise TypeError(msg)

        if value not in self._options:
            msg = f"Expected {value!r} to be one of {list(self._options)!r}"
            self._logger.error(msg)
            raise ValueError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                    LABEL VALIDATOR                                               #
# ------------------------------------------------------------------------------------------------ #
class ValidLabel(OneOf):
    """Validates the class label of an EEG sample: 0 alert, 1 drowsy."""

    def __init__(self) -> None:
        super().__init__(options=LABELS, kind=int)


# ------------------------------------------------------------------------------------------------ #
#                                    KIND VALIDATOR                                                #
# ------------------------------------------------------------------------------------------------ #
class ValidKind(OneOf):
    """Validates the kind of a dataset bundle."""

    def __init__(self) -> None:
        super().__init__(options=KINDS, kind=str)


