"""
Logging utilities for linkrank.

This module sets up the root logger for CLI runs: an optional UTF-8 log file plus
a console handler. The console goes to stderr so reports written to stdout stay
machine-readable.
"""

import logging
import os
import sys
from typing import Optional, Union


def setup_logging(
    log_dir: Optional[str] = None,
    log_level: Union[int, str] = logging.INFO,
    log_file_name: str = "linkrank.log",
) -> None:
    """
    Set up root logging.

    Args:
        log_dir: Directory for the log file. No file handler when None.
        log_level: The logging level, as an int or a level name (default: INFO)
        log_file_name: The name of the log file (default: "linkrank.log")
    """
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
        if not isinstance(log_level, int):
            log_level = logging.INFO

    file_formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    console_formatter = logging.Formatter(
        "%(asctime)s - %(levelname)s - %(message)s"
    )

    handlers = []

    log_file = None
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_file = os.path.join(log_dir, log_file_name)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(file_formatter)
        handlers.append(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    handlers.append(console_handler)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Remove any existing handlers
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    for handler in handlers:
        root_logger.addHandler(handler)

    logging.debug(f"Logging configured with level {logging.getLevelName(log_level)}")
    if log_file:
        logging.debug(f"Log file: {log_file}")
