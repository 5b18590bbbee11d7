"""
Environment-driven settings and logging setup.

Values come from environment variables, optionally loaded from a `.env` file
with `python-dotenv` (existing variables win, as in the Streamlit app).

    - `DOE_DEVICE_DIR`      directory holding device profile files
    - `DOE_DEFAULT_DEVICE`  profile used when none is given
    - `DOE_LOG_LEVEL`       logging level name
    - `DOE_SEED`            default simulator seed
"""

# Import libraries
from __future__ import annotations

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

from common.constants import DEFAULT_DEVICE, DEFAULT_SEED, DEVICE_DIR_DEFAULT

load_dotenv(override=False)

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def device_dir() -> Path:
    return Path(os.getenv("DOE_DEVICE_DIR", str(DEVICE_DIR_DEFAULT)))


def default_device() -> str:
    return os.getenv("DOE_DEFAULT_DEVICE", DEFAULT_DEVICE)


def default_seed() -> int:
    try:
        return int(os.getenv("DOE_SEED", str(DEFAULT_SEED)))
    except ValueError:
        return DEFAULT_SEED


def log_level() -> str:
    return os.getenv("DOE_LOG_LEVEL", "WARNING").upper()


def configure_logging(level: int | str | None = None) -> None:
    """Configure the root logger once; later calls only adjust the level."""
    level = level if level is not None else log_level()
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=LOG_FORMAT)
    else:
        root.setLevel(level)
