import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional, TypeVar

import numpy as np

from monomial_lab._settings import resolve_threads
from monomial_lab.extensions import shewchuk

T = TypeVar("T")
R = TypeVar("R")


def _float_token(value: float):
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def canonicalize(obj):
    """Recursively convert an object into a JSON-serializable structure
    that is independent of internal ordering.

    Tuples (multi-indices) become lists, sets become sorted lists, numpy
    scalars and arrays become Python values, fractions become floats and
    non-finite floats become the strings ``"inf"``, ``"-inf"``, ``"nan"``.
    """
    if isinstance(obj, dict):
        return {str(key): canonicalize(obj[key]) for key in sorted(obj.keys(), key=lambda x: str(x))}
    if isinstance(obj, (set, frozenset)):
        return sorted((canonicalize(item) for item in obj), key=lambda x: json.dumps(x, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [canonicalize(item) for item in obj]
    if isinstance(obj, np.ndarray):
        return [canonicalize(item) for item in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating, Fraction)):
        return _float_token(float(obj))
    if isinstance(obj, complex):
        return {"re": _float_token(obj.real), "im": _float_token(obj.imag)}
    if isinstance(obj, Enum):
        return canonicalize(obj.value)
    if isinstance(obj, str) or obj is None:
        return obj
    if hasattr(obj, "to_dict"):
        return canonicalize(obj.to_dict())
    if hasattr(obj, "__dict__"):
        return canonicalize(obj.__dict__)
    return str(obj)


def canonical_dumps(obj, indent: Optional[int] = None) -> str:
    """Deterministic JSON text: sorted keys, no NaN literals, shortest round-trip floats."""
    separators = (",", ":") if indent is None else (",", ": ")
    return json.dumps(canonicalize(obj), sort_keys=True, separators=separators, indent=indent, allow_nan=False)


def obj_canonicalized_hash(obj) -> str:
    """SHA-256 hex digest of :func:`canonical_dumps`."""
    obj_serialized = canonical_dumps(obj).encode("utf-8")
    hash_obj = hashlib.sha256()
    hash_obj.update(obj_serialized)
    return hash_obj.hexdigest()


def format_float(value: float) -> str:
    """17 significant digits, used by the CSV writer."""
    token = _float_token(float(value))
    if isinstance(token, str):
        return token
    return format(token, ".17g")


def compensated_sum(values: Iterable[float]) -> float:
    """Error-free accumulated sum of real values.

    Uses Shewchuk expansions from the ``shewchuk`` package when installed,
    ``math.fsum`` otherwise. Both are exact up to the final rounding.
    """
    if isinstance(values, np.ndarray):
        values = values.tolist()
    if shewchuk.available:
        total = shewchuk.Expansion()
        for value in values:
            total = total + float(value)
        return float(total)
    return math.fsum(values)


def compensated_complex_sum(values: Iterable[complex]) -> complex:
    real: List[float] = []
    imag: List[float] = []
    for value in values:
        value = complex(value)
        real.append(value.real)
        imag.append(value.imag)
    return complex(compensated_sum(real), compensated_sum(imag))


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Map ``func`` over ``items`` keeping input order, optionally on a thread pool.

    The result is the same list for every thread count.
    """
    items = list(items)
    n_threads = resolve_threads(threads)
    if n_threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=n_threads) as pool:
        return list(pool.map(func, items))


def relative_difference(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale


def as_generator(rng: Any) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
