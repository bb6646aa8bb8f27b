"""Points of sequence spaces used to test monomial sums.

A point is either an explicit finite vector or one of the parametric
families ``u_n = n^(-a) (log(n+2))^(-b)`` and
``u_n = p_n^(-s) (log p_n)^(-eps) v_n``. Parametric points are infinite;
the optional truncation ``N`` bounds the coordinates that may be read.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from monomial_lab._errors import DimensionError, DomainError
from monomial_lab._util import compensated_sum
from monomial_lab.weights import weight_sequence


class SequencePoint(ABC):
    """A (possibly infinite) complex sequence ``u = (u_1, u_2, ...)``."""

    truncation: Optional[int] = None

    @property
    def dimension(self) -> Optional[int]:
        """Number of readable coordinates, ``None`` when unbounded."""
        return self.truncation

    @abstractmethod
    def _values(self, count: int) -> np.ndarray: ...

    @abstractmethod
    def to_dict(self) -> dict: ...

    def values(self, count: int) -> np.ndarray:
        """The first ``count`` coordinates as a complex array.

        Raises:
            DimensionError: if the point has fewer coordinates.
        """
        if self.dimension is not None and count > self.dimension:
            raise DimensionError(f"Point has {self.dimension} coordinates, {count} are needed")
        if count <= 0:
            return np.zeros(0, dtype=np.complex128)
        return np.asarray(self._values(count), dtype=np.complex128)

    def coordinate(self, k: int) -> complex:
        return complex(self.values(k)[k - 1])

    def norm(self, r: float, count: Optional[int] = None) -> float:
        """``||u||_r`` over the first ``count`` coordinates (default: all of them)."""
        count = self.dimension if count is None else count
        if count is None:
            raise DimensionError("The norm of an untruncated parametric point needs a coordinate count")
        moduli = np.abs(self.values(count))
        if len(moduli) == 0:
            return 0.0
        if math.isinf(r):
            return float(moduli.max())
        return compensated_sum(moduli**r) ** (1.0 / r)

    def normalized(self, r: float, count: Optional[int] = None) -> "ExplicitPoint":
        """Explicit copy of the first ``count`` coordinates scaled to unit ``ℓ_r`` norm."""
        count = self.dimension if count is None else count
        norm = self.norm(r, count)
        if norm == 0:
            raise DomainError("The zero point cannot be normalized")
        return ExplicitPoint(self.values(count) / norm)


@dataclass(frozen=True, eq=False)
class ExplicitPoint(SequencePoint):
    """Finite vector; coordinates past its length cannot be read."""

    coords: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.complex128))

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=np.complex128)
        if coords.ndim != 1:
            raise DimensionError(f"Expected a vector, got shape {coords.shape}")
        object.__setattr__(self, "coords", coords)

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def _values(self, count: int) -> np.ndarray:
        return self.coords[:count]

    def to_dict(self) -> dict:
        return {"kind": "vec", "coords": [complex(c) if c.imag else c.real for c in self.coords]}


@dataclass(frozen=True)
class PowerLogPoint(SequencePoint):
    """``u_n = n^(-a) (log(n+2))^(-b)`` with ``a, b >= 0``."""

    a: float
    b: float = 0.0
    truncation: Optional[int] = None

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError(f"Need a, b >= 0 for a nonincreasing point, got a={self.a}, b={self.b}")

    def _values(self, count: int) -> np.ndarray:
        n = np.arange(1, count + 1, dtype=np.float64)
        return n ** (-self.a) * np.log(n + 2.0) ** (-self.b)

    def to_dict(self) -> dict:
        return {"kind": "n", "a": self.a, "b": self.b, "truncation": self.truncation}


@dataclass(frozen=True)
class PrimeScaledPoint(SequencePoint):
    """``u_n = p_n^(-s) (log p_n)^(-eps) v_n``; ``v`` defaults to all ones.

    When ``v`` is given as a point, the truncation is at most its dimension.
    """

    s: float
    eps: float = 0.0
    base: Optional[SequencePoint] = None
    truncation: Optional[int] = None

    def __post_init__(self):
        if self.s < 0 or self.eps < 0:
            raise DomainError(f"Need s, eps >= 0, got s={self.s}, eps={self.eps}")
        if self.base is not None and self.base.dimension is not None:
            limit = self.base.dimension if self.truncation is None else min(self.truncation, self.base.dimension)
            object.__setattr__(self, "truncation", limit)

    def _values(self, count: int) -> np.ndarray:
        primes = weight_sequence("primes").terms(count).astype(np.float64)
        scale = primes ** (-self.s) * np.log(primes) ** (-self.eps)
        if self.base is None:
            return scale
        return scale * self.base.values(count)

    def to_dict(self) -> dict:
        return {
            "kind": "p",
            "s": self.s,
            "eps": self.eps,
            "base": None if self.base is None else self.base.to_dict(),
            "truncation": self.truncation,
        }


def as_point(u) -> SequencePoint:
    """Wrap vectors as :class:`ExplicitPoint`, pass points through, parse strings."""
    if isinstance(u, SequencePoint):
        return u
    if isinstance(u, str):
        return parse_point(u)
    return ExplicitPoint(np.asarray(u, dtype=np.complex128))


def _parse_options(parts: Sequence[str], allowed: Sequence[str], text: str) -> dict:
    options = {}
    for part in parts:
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in allowed:
            raise ValueError(f"Invalid option {part!r} in point {text!r}; expected one of {', '.join(allowed)}")
        options[key] = int(value) if key == "N" else float(value)
    return options


def parse_point(text: str) -> SequencePoint:
    """Parse a point description.

    Accepted forms:

    - ``"vec:0.5,0.25"`` (complex entries such as ``1+2j`` allowed);
    - ``"n:-0.75:b=1.2"`` for ``u_n = n^-0.75 (log(n+2))^-1.2``;
    - ``"p:-1:eps=0.1"`` for ``u_n = p_n^-1 (log p_n)^-0.1``.

    The parametric forms accept ``N=<int>`` as truncation.
    """
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "vec":
        if not rest.strip():
            return ExplicitPoint(np.zeros(0, dtype=np.complex128))
        try:
            coords = [complex(item.strip().replace(" ", "")) for item in rest.split(",")]
        except ValueError:
            raise ValueError(f"Invalid coordinates in point {text!r}") from None
        return ExplicitPoint(np.asarray(coords, dtype=np.complex128))
    if kind not in ("n", "p"):
        raise ValueError(f"Unknown point kind {kind!r} in {text!r}; expected 'vec', 'n' or 'p'")
    exponent, *parts = rest.split(":")
    try:
        power = -float(exponent)
    except ValueError:
        raise ValueError(f"Invalid exponent {exponent!r} in point {text!r}") from None
    if kind == "n":
        options = _parse_options(parts, ("b", "N"), text)
        return PowerLogPoint(power, options.get("b", 0.0), options.get("N"))
    options = _parse_options(parts, ("eps", "N"), text)
    return PrimeScaledPoint(power, options.get("eps", 0.0), truncation=options.get("N"))


class ModulusTable:
    """Growing cache of ``|u_k|`` for evaluating ``|u_j| = prod_i |u_(j_i)|`` over index streams."""

    def __init__(self, u):
        self.point = as_point(u)
        self._moduli = np.zeros(0)

    def _ensure(self, k: int) -> np.ndarray:
        if k > len(self._moduli):
            size = max(k, 2 * len(self._moduli), 64)
            if self.point.dimension is not None:
                if k > self.point.dimension:
                    raise DimensionError(f"Point has {self.point.dimension} coordinates, coordinate {k} is needed")
                size = min(size, self.point.dimension)
            self._moduli = np.abs(self.point.values(size))
        return self._moduli

    def coordinate(self, k: int) -> float:
        return float(self._ensure(k)[k - 1])

    def monomial(self, j: Sequence[int]) -> float:
        if not j:
            return 1.0
        moduli = self._ensure(j[-1] if isinstance(j, tuple) else max(j))
        return math.prod(float(moduli[e - 1]) for e in j)
