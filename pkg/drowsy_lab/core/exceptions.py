#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/core/exceptions.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 02:30:40 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Exception hierarchy. Each branch maps to one command line exit code."""


# ------------------------------------------------------------------------------------------------ #
#                                        BASE                                                      #
# ------------------------------------------------------------------------------------------------ #
class DrowsyLabError(Exception):
    """Root of all package specific errors."""

    exit_code = 2


# ------------------------------------------------------------------------------------------------ #
#                                     DATA ERRORS                                                  #
# ------------------------------------------------------------------------------------------------ #
class DataError(DrowsyLabError, ValueError):
    """Input data violates a precondition."""

    exit_code = 2


class EmptySessionError(DataError):
    """A recording session has no trials."""


class NoSurvivingSessionError(DataError):
    """Every session was discarded by the class count threshold."""


class ClassMissingError(DataError):
    """A subject or training set lacks one of the two classes."""


class UnknownSubjectError(DataError, KeyError):
    """The requested subject is not part of the bundle."""

    def __str__(self) -> str:
        # KeyError quotes its message otherwise.
        return str(self.args[0]) if self.args else ""


class SubjectMismatchError(DataError):
    """Two bundles expected to share subjects do not."""


class ShapeError(DataError):
    """An array does not have the geometry the operation requires."""


# ------------------------------------------------------------------------------------------------ #
#                                CONTAINER FORMAT ERRORS                                           #
# ------------------------------------------------------------------------------------------------ #
class ContainerFormatError(DataError):
    """An EEGB container or checkpoint file cannot be decoded."""


class MagicMismatchError(ContainerFormatError):
    """The leading magic bytes are wrong."""


class TruncatedPayloadError(ContainerFormatError):
    """The file ends before the header announced."""


class DimensionMismatchError(ContainerFormatError):
    """Channel count or length in the header disagrees with the package geometry."""


# ------------------------------------------------------------------------------------------------ #
#                                   NUMERICAL ERRORS                                               #
# ------------------------------------------------------------------------------------------------ #
class NumericalError(DrowsyLabError, ArithmeticError):
    """A computation produced a non-finite value or a singular system."""

    exit_code = 3
