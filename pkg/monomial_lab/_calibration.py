import json
from functools import lru_cache
from importlib import resources
from typing import Any, Dict

from monomial_lab._constants import CONSTANTS_SCHEMA
from monomial_lab._settings import LOGGER


@lru_cache(maxsize=1)
def calibrated_constants() -> Dict[str, Any]:
    """Empirically calibrated constants shipped with the package."""
    text = resources.files("monomial_lab").joinpath("resources", "constants.json").read_text(encoding="utf-8")
    data = json.loads(text)
    if data.get("schema") != CONSTANTS_SCHEMA:
        raise ValueError(f"Unexpected constants schema {data.get('schema')!r}, expected {CONSTANTS_SCHEMA!r}")
    return data


def prime_plus_constant() -> float:
    LOGGER.debug("Using the calibrated constant for the prime J+ size bound")
    return float(calibrated_constants()["prime_plus_c"])


def landau_constant(m: int) -> float:
    table = calibrated_constants()["landau_c"]
    return float(table.get(str(m), table["default"]))


def ksz_constant() -> float:
    return float(calibrated_constants()["ksz_c"])
