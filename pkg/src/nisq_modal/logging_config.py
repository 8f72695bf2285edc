"""Configure application‑wide logging.

All modules in this package import the `get_logger` function and create a
module‑specific logger.  Messages go to standard error so that the tables
and JSON documents written to standard output stay byte‑identical between
runs.  The format includes timestamps and log levels, aiding debugging.
"""

import logging
from typing import Optional, Union

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_root_logger(level: Union[int, str] = logging.INFO) -> None:
    """Configure the root logger with a basic format.

    Parameters
    ----------
    level: int or str, optional
        The minimum log level; defaults to `logging.INFO`.  Level names such
        as ``"WARNING"`` are accepted as well.
    """

    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    logging.basicConfig(level=level, format=LOG_FORMAT)
    # basicConfig is a no-op once handlers exist; keep the level in sync.
    logging.getLogger().setLevel(level)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Return a logger with the specified name.

    Parameters
    ----------
    name: str, optional
        The name of the logger; if `None`, the root logger is returned.

    Returns
    -------
    logging.Logger
        A configured logger instance.
    """

    return logging.getLogger(name)


# Initialise logging on import
setup_root_logger(logging.WARNING)


if __name__ == "__main__":
    setup_root_logger()
    logger = get_logger(__name__)
    logger.info("Logging is configured correctly.")
