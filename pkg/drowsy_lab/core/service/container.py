#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/core/service/container.py                                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:51:29 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Service Layer Dependency Injection Container"""
import logging
import logging.config  # pragma: no cover
import os

from dependency_injector import containers, providers  # pragma: no cover

from drowsy_lab.core.service.io import IOService


# ------------------------------------------------------------------------------------------------ #
def setup_logging(config: dict = None) -> None:
    """Applies a dictConfig logging configuration, creating directories for file handlers."""
    if not config:
        logging.basicConfig(
            level=logging.INFO,
            format="[%(asctime)s] [%(levelname)s] [%(name)s] [%(funcName)s] : %(message)s",
        )
        return
    for handler in config.get("handlers", {}).values():
        filename = handler.get("filename")
        if filename and os.path.dirname(filename):
            os.makedirs(os.path.dirname(filename), exist_ok=True)
    logging.config.dictConfig(config)


# ------------------------------------------------------------------------------------------------ #
class ServiceContainer(containers.DeclarativeContainer):

    config = providers.Configuration()

    logging = providers.Resource(
        setup_logging,
        config=config.logging,
    )

    io = providers.Singleton(IOService)
