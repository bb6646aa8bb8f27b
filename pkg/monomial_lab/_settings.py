import logging
import os
import sys
from importlib.util import find_spec

LOGGER = logging.getLogger("monomial_lab")
LOGGER.setLevel(logging.WARNING)
LOGGER.propagate = False

# stdout carries the machine-readable artifacts, logs go to stderr
_stream_handler = logging.StreamHandler(sys.stderr)
_stream_handler.setFormatter(
    logging.Formatter(
        fmt="(monomial-lab) %(asctime)-18s - %(levelname)-8s: %(message)s",
        datefmt="%b %d %I:%M:%S %p",
    )
)
LOGGER.addHandler(_stream_handler)


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        LOGGER.warning(f"Ignoring {name}={value!r}: not an integer, using {default}")
        return default


DEFAULT_THREADS = _env_int("MONOMIAL_LAB_THREADS", 1)
MAX_ELEMENTS = _env_int("MONOMIAL_LAB_MAX_ELEMENTS", 10**8)
WEIGHT_BITS = _env_int("MONOMIAL_LAB_WEIGHT_BITS", 4096)

USE_SHEWCHUK = find_spec("shewchuk") is not None and not os.environ.get("MONOMIAL_LAB_IGNORE_SHEWCHUK", False)


def resolve_threads(threads=None) -> int:
    """Number of worker threads, explicit value first, then the environment."""
    if threads is None:
        threads = DEFAULT_THREADS
    return max(1, int(threads))
