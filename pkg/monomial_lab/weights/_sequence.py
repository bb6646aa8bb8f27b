import math
import threading
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import numpy as np

from monomial_lab._constants import WeightKind
from monomial_lab._errors import DomainError, UnsupportedSequenceError, WeightOverflowError
from monomial_lab._settings import LOGGER, WEIGHT_BITS
from monomial_lab._util import compensated_sum
from monomial_lab.weights._sieve import nth_prime_upper, sieve_segment

Weight = Union[int, float]


def g_theta(x: float, theta: float) -> float:
    """``(log x)^(1-theta)/(1-theta)`` for ``theta < 1`` and ``log log x`` for ``theta = 1``."""
    if x <= 1:
        raise DomainError(f"g_theta needs x > 1, got {x}")
    if theta == 1:
        return math.log(math.log(x))
    return math.log(x) ** (1 - theta) / (1 - theta)


class WeightSequence(ABC):
    """Strictly increasing sequence ``q_1 < q_2 < ...`` with ``q_1 > 1``.

    Terms are cached in a numpy array that grows on demand; growth is
    serialized by a lock, readers only ever see a complete array.
    """

    kind: WeightKind

    def __init__(self):
        self._lock = threading.Lock()
        self._terms = np.empty(0)

    @abstractmethod
    def _grow(self, count: int, value: float) -> np.ndarray:
        """Return a table holding at least ``count`` terms and some term ``> value``."""

    @property
    @abstractmethod
    def label(self) -> str:
        """Text accepted by :func:`weight_sequence`."""

    @property
    def exact(self) -> bool:
        return False

    def _ensure(self, count: int = 0, value: float = -math.inf) -> np.ndarray:
        terms = self._terms
        if len(terms) >= count and len(terms) > 0 and terms[-1] > value:
            return terms
        with self._lock:
            terms = self._terms
            if len(terms) >= count and len(terms) > 0 and terms[-1] > value:
                return terms
            terms = self._grow(count, value)
            LOGGER.debug(f"{self.label}: cached {len(terms)} terms up to {terms[-1]}")
            self._terms = terms
            return terms

    def term(self, k: int) -> Weight:
        """``q_k`` for ``k >= 1``."""
        if k < 1:
            raise ValueError(f"Terms are indexed from 1, got {k}")
        return self._to_weight(self._ensure(count=k)[k - 1])

    def terms(self, count: int) -> np.ndarray:
        return self._ensure(count=count)[:count]

    def terms_upto(self, value: float) -> List[Weight]:
        """All ``q_k <= value`` as Python numbers."""
        if value < 1:
            return []
        terms = self._ensure(value=value)
        stop = int(np.searchsorted(terms, value, side="right"))
        return terms[:stop].tolist()

    def index_weight(self, j: Sequence[int]) -> Weight:
        """``q_j = prod_i q_{j_i}``; ``q_ϑ = 1``."""
        if not j:
            return 1 if self.exact else 1.0
        terms = self._ensure(count=max(j))
        weight = 1 if self.exact else 1.0
        for e in j:
            weight = weight * self._to_weight(terms[e - 1])
        return self._check_weight(weight)

    def cutoff_rank(self, y: float) -> int:
        """The ``l`` with ``q_l <= y < q_{l+1}`` (0 when ``y < q_1``)."""
        if y < self.term(1):
            return 0
        terms = self._ensure(value=y)
        return int(np.searchsorted(terms, y, side="right"))

    def reciprocal_sum_bound(self, x: float) -> Tuple[float, float]:
        raise UnsupportedSequenceError(f"The reciprocal sum bound is not defined for {self.label}")

    def _to_weight(self, value) -> Weight:
        return float(value)

    def _check_weight(self, weight: Weight) -> Weight:
        return weight

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r})"


class PrimeSequence(WeightSequence):
    """The primes ``p_1 = 2, p_2 = 3, ...`` with exact integer weights."""

    kind = WeightKind.PRIMES

    def __init__(self, weight_bits: int = WEIGHT_BITS):
        super().__init__()
        self._terms = np.empty(0, dtype=np.int64)
        self._limit = 1
        self.weight_bits = weight_bits

    @property
    def label(self) -> str:
        return "primes"

    @property
    def exact(self) -> bool:
        return True

    def _grow(self, count: int, value: float) -> np.ndarray:
        terms = self._terms
        limit = self._limit
        target = max(nth_prime_upper(count), int(value) + 1 if value > 0 else 0, 2 * limit, 64)
        while True:
            extra = sieve_segment(limit, target)
            terms = np.concatenate([terms, extra]) if len(extra) else terms
            limit = target
            if len(terms) >= count and len(terms) > 0 and terms[-1] > value:
                break
            target *= 2
        self._limit = limit
        return terms

    def _to_weight(self, value) -> Weight:
        return int(value)

    def _check_weight(self, weight: Weight) -> Weight:
        if weight.bit_length() > self.weight_bits:
            raise WeightOverflowError(f"Prime weight needs {weight.bit_length()} bits, cap is {self.weight_bits}")
        return weight

    def log_product_ratio(self, j: Sequence[int]) -> Tuple[float, float]:
        """Both sides of ``prod_i log p_{j_i} >= (log 2)^(m-1)/m * log p_j``."""
        m = len(j)
        if m == 0:
            raise ValueError("Needs a nonempty index")
        logs = [math.log(self.term(e)) for e in j]
        lhs = math.prod(logs)
        rhs = math.log(2) ** (m - 1) / m * math.fsum(logs)
        return lhs, rhs


class KLogSequence(WeightSequence):
    """``q_k = k (log(k+2))^theta`` for ``0 < theta <= 1``."""

    kind = WeightKind.KLOG

    def __init__(self, theta: float = 1.0):
        if not 0 < theta <= 1:
            raise DomainError(f"theta must lie in (0, 1], got {theta}")
        super().__init__()
        self.theta = float(theta)

    @property
    def label(self) -> str:
        return f"klog:{self.theta:g}"

    def _formula(self, k: np.ndarray) -> np.ndarray:
        return k * np.log(k + 2.0) ** self.theta

    def _grow(self, count: int, value: float) -> np.ndarray:
        size = max(count, 2 * len(self._terms), 64)
        while True:
            terms = self._formula(np.arange(1, size + 1, dtype=np.float64))
            if terms[-1] > value:
                return terms
            size *= 2

    def reciprocal_constant(self) -> float:
        """``c = 1/q_1 + 1/q_2 + 1/q_3``."""
        return compensated_sum(1.0 / self.terms(3))

    def reciprocal_sum_bound(self, x: float) -> Tuple[float, float]:
        """``sum_{k <= x} 1/q_k`` and its bound ``g_theta(x) + c``."""
        if x <= 3:
            raise DomainError(f"The reciprocal sum bound needs x > 3, got {x}")
        count = int(math.floor(x))
        partial = compensated_sum(1.0 / self.terms(count))
        return partial, g_theta(x, self.theta) + self.reciprocal_constant()


@lru_cache(maxsize=None)
def _cached_sequence(kind: WeightKind, theta: float) -> WeightSequence:
    if kind is WeightKind.PRIMES:
        return PrimeSequence()
    return KLogSequence(theta)


def weight_sequence(spec: Union[str, WeightSequence] = "primes") -> WeightSequence:
    """Shared sequence instance from ``"primes"``, ``"klog"`` or ``"klog:<theta>"``.

    Examples:
        >>> weight_sequence("primes").term(4)
        7
    """
    if isinstance(spec, WeightSequence):
        return spec
    text = spec.strip().lower()
    if text == WeightKind.PRIMES.value:
        return _cached_sequence(WeightKind.PRIMES, 1.0)
    name, _, param = text.partition(":")
    if name != WeightKind.KLOG.value:
        raise ValueError(f"Unknown weight sequence {spec!r}: expected 'primes' or 'klog:<theta>'")
    try:
        theta = float(param) if param else 1.0
    except ValueError:
        raise ValueError(f"Invalid theta in weight sequence {spec!r}") from None
    return _cached_sequence(WeightKind.KLOG, theta)
