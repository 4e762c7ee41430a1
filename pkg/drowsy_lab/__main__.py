#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/__main__.py                                                             #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 03:24:36 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Main Module."""
import sys

from drowsy_lab.harness.cli import main

# ------------------------------------------------------------------------------------------------ #
if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
