#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/container.py                                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 14th 2026 09:16:14 pm                                             #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Application Dependency Injector Container"""
import os

import dotenv

from dependency_injector import containers, providers  # pragma: no cover

from drowsy_lab import MODES
from drowsy_lab.core.service.container import ServiceContainer

# ------------------------------------------------------------------------------------------------ #
dotenv.load_dotenv()
MODE = os.getenv("MODE", "dev")
if MODE not in MODES:
    raise ValueError(f"MODE must be one of {MODES}, got {MODE!r}.")
CONFIG_FILEPATH = os.getenv("DROWSY_LAB_CONFIG", "config.yml")
LOGGING_FILEPATH = os.path.join("config", MODE, "logging.yml")


# ------------------------------------------------------------------------------------------------ #
class DrowsyLab(containers.DeclarativeContainer):

    config = providers.Configuration(yaml_files=[CONFIG_FILEPATH, LOGGING_FILEPATH])

    core = providers.Container(ServiceContainer, config=config)
