"""Logging setup for the command line and for detailed check logs."""

import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logger(logfile: Optional[str] = None, verbose: bool = False) -> logging.Logger:
    """Configure the root logger; stderr always, a utf-8 file when logfile is given."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if logfile:
        handlers.append(logging.FileHandler(logfile, encoding="utf-8"))
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    return logging.getLogger("superplactic")


def get_file_logger(logfile: str = "superplactic_checks.log") -> logging.Logger:
    """Return a dedicated logger writing to ``logfile``."""
    logger = logging.getLogger(f"superplactic.{logfile}")
    if not logger.handlers:
        handler = RotatingFileHandler(logfile, maxBytes=500000, backupCount=3, encoding="utf-8")
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(logging.INFO)
        logger.propagate = False
    return logger
