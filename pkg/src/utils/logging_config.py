#!/usr/bin/env python3
"""
Logging setup for the command line

Log records go to stderr only; stdout carries results.
"""

import logging
import sys

from pythonjsonlogger import jsonlogger

from utils.settings import Settings


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
HANDLER_NAME = "efpm"


def configure_logging(settings: Settings) -> logging.Handler:
    """
    Install a single stderr handler on the root logger

    Args:
        settings: Supplies level and format (text or json)

    Returns:
        The installed handler
    """
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(HANDLER_NAME)
    if settings.log_format == "json":
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))

    logging.basicConfig(
        level=getattr(logging, settings.log_level),
        handlers=[handler],
        force=True,
    )
    return handler
