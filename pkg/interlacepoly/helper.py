# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Module for commonly used functions across the modules.
"""

import logging
import sys

# A very verbose logging level, below DEBUG
TRACE = 5
LOG_LEVELS = ('TRACE', 'DEBUG', 'INFO', 'WARN', 'CRITICAL')

_log_formatter = None

logging.addLevelName(TRACE, 'TRACE')


def initialise_logging(default_level=logging.WARNING, stream=None):
    """
    Routes all logging to the error stream, standard output only carries results.
    """
    global _log_formatter
    _log_formatter = logging.Formatter("%(asctime)s [%(name)s:L%(lineno)d] %(levelname)s: %(message)s")

    # Capture all warnings
    logging.captureWarnings(True)

    # Remove default handlers
    root_logger = logging.getLogger()
    root_logger.handlers = []

    console_handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    console_handler.setFormatter(_log_formatter)
    root_logger.addHandler(console_handler)

    root_logger.setLevel(default_level)


def parse_log_level(name: str) -> int:
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level '{name}', available options are: {', '.join(LOG_LEVELS)}")
    return level
