"""Exponents ``r`` in ``[1, inf]`` and the quantities derived from them."""

import math
from fractions import Fraction
from typing import Union

from monomial_lab._errors import DomainError

Exponent = Union[Fraction, float]


def parse_r(value) -> Exponent:
    """Normalize ``r`` to a ``Fraction`` or ``math.inf``.

    Accepts numbers, fractions and strings such as ``"1.5"``, ``"3/2"``,
    ``"inf"`` or ``"∞"``.
    """
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞", "+inf"):
            return math.inf
        try:
            value = Fraction(text)
        except ValueError:
            raise ValueError(f"Invalid exponent r={value!r}") from None
    elif isinstance(value, float):
        if math.isinf(value):
            if value < 0:
                raise DomainError("r must be at least 1")
            return math.inf
        if math.isnan(value):
            raise DomainError("r must be a number")
        value = Fraction(repr(value))
    else:
        value = Fraction(value)
    if value < 1:
        raise DomainError(f"r must lie in [1, inf], got {value}")
    return value


def r_label(r: Exponent) -> str:
    if r == math.inf:
        return "inf"
    if r.denominator == 1:
        return str(r.numerator)
    return repr(float(r))


def inverse(r: Exponent) -> float:
    """``1/r`` with ``1/inf = 0``."""
    return 0.0 if r == math.inf else float(1 / r)


def sigma(r) -> float:
    """``1 - 1/min(r, 2)``."""
    r = parse_r(r)
    return 1.0 - (0.5 if r >= 2 else float(1 / r))


def conjugate(r) -> float:
    """``r'`` with ``1/r + 1/r' = 1``: ``inf`` for ``r = 1`` and ``1`` for ``r = inf``."""
    r = parse_r(r)
    if r == math.inf:
        return 1.0
    if r == 1:
        return math.inf
    return float(r / (r - 1))
