"""Multi-index algebra.

A multi-index ``j = (j_1, ..., j_m)`` with ``1 <= j_1 <= ... <= j_m`` names the
monomial ``z_{j_1} ... z_{j_m}``. The empty index (length 0) is the constant
monomial and the identity of concatenation. Exponent vectors ``alpha`` count
how often each coordinate occurs.
"""

import math
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from monomial_lab._errors import CapExceededError, MixedLengthError, OrderViolationError
from monomial_lab._settings import LOGGER, MAX_ELEMENTS


class MultiIndex(tuple):
    """Nondecreasing tuple of positive integers.

    Being a tuple, it hashes, compares lexicographically and serializes as a
    JSON array. ``MultiIndex()`` is the empty index.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        values = tuple(int(e) for e in entries)
        prev = 1
        for e in values:
            if e < prev:
                if e < 1:
                    raise OrderViolationError(f"Multi-index entries must be positive integers, got {values}")
                raise OrderViolationError(f"Multi-index entries must be nondecreasing, got {values}")
            prev = e
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, entries: tuple) -> "MultiIndex":
        # entries already known to be sorted and positive
        return super().__new__(cls, entries)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def is_empty(self) -> bool:
        return len(self) == 0

    @property
    def max_entry(self) -> int:
        return self[-1] if self else 0

    @property
    def min_entry(self) -> Optional[int]:
        return self[0] if self else None

    def __repr__(self) -> str:
        if not self:
            return "MultiIndex(ϑ)"
        return f"MultiIndex{tuple(self)}"


EMPTY = MultiIndex()


class ExponentVector(tuple):
    """Nonnegative integer vector ``alpha`` with trailing zeros trimmed."""

    __slots__ = ()

    def __new__(cls, alpha: Iterable[int] = ()):
        values = [int(a) for a in alpha]
        if any(a < 0 for a in values):
            raise ValueError(f"Exponents must be nonnegative, got {values}")
        while values and values[-1] == 0:
            values.pop()
        return super().__new__(cls, values)

    @property
    def order(self) -> int:
        return sum(self)

    @property
    def support(self) -> int:
        """Largest coordinate with a nonzero exponent (0 for the zero vector)."""
        return len(self)

    def padded(self, n: int) -> tuple:
        if n < len(self):
            raise ValueError(f"Exponent vector {tuple(self)} has support beyond {n}")
        return tuple(self) + (0,) * (n - len(self))


def to_exponent(j: Sequence[int]) -> ExponentVector:
    j = j if isinstance(j, MultiIndex) else MultiIndex(j)
    if not j:
        return ExponentVector()
    alpha = [0] * j[-1]
    for e in j:
        alpha[e - 1] += 1
    return ExponentVector(alpha)


def from_exponent(alpha: Sequence[int]) -> MultiIndex:
    alpha = alpha if isinstance(alpha, ExponentVector) else ExponentVector(alpha)
    entries = []
    for coord, count in enumerate(alpha, start=1):
        entries.extend([coord] * count)
    return MultiIndex._trusted(tuple(entries))


def multiplicity(j: Sequence[int]) -> int:
    """Number of distinct orderings of ``j``, i.e. ``m!/alpha!`` (exact integer)."""
    alpha = to_exponent(j)
    value = math.factorial(alpha.order)
    for a in alpha:
        value //= math.factorial(a)
    return value


def count_jmn(m: int, n: int) -> int:
    """``|J(m,n)| = binom(n+m-1, m)``."""
    if m < 0 or n < 1:
        raise ValueError(f"Expected m >= 0 and n >= 1, got m={m}, n={n}")
    return math.comb(n + m - 1, m)


def enumerate_jmn(m: int, n: int, cap: Optional[int] = None) -> Iterator[MultiIndex]:
    """Stream ``J(m,n)`` in lexicographic order.

    Raises:
        CapExceededError: if ``binom(n+m-1, m)`` exceeds ``cap``
            (default ``MONOMIAL_LAB_MAX_ELEMENTS``).
    """
    size = count_jmn(m, n)
    cap = MAX_ELEMENTS if cap is None else cap
    if size > cap:
        raise CapExceededError(f"|J({m},{n})| = {size} exceeds the element cap {cap}")
    LOGGER.debug(f"Enumerating J({m},{n}) with {size} elements")
    for entries in combinations_with_replacement(range(1, n + 1), m):
        yield MultiIndex._trusted(entries)


def reduce(J: Iterable[Sequence[int]], m: Optional[int] = None) -> frozenset:
    """Reduced set ``J* = {j : (j, k) in J for some k >= j_{m-1}}``.

    Every element of ``J`` is a nondecreasing index, so the last entry is the
    suffix extension and ``J*`` is the set of prefixes of length ``m - 1``.

    Raises:
        MixedLengthError: if ``J`` mixes lengths, or an element is not of length ``m``.
    """
    reduced = set()
    length = m
    for j in J:
        j = j if isinstance(j, MultiIndex) else MultiIndex(j)
        if length is None:
            length = len(j)
        if len(j) != length:
            raise MixedLengthError(f"Cannot reduce a set mixing lengths {length} and {len(j)}")
        if length < 1:
            raise MixedLengthError("The reduced set needs indices of length at least 1")
        reduced.add(MultiIndex._trusted(tuple(j[:-1])))
    return frozenset(reduced)


def concat(i: Sequence[int], j: Sequence[int]) -> MultiIndex:
    """``(i, j)``, defined when ``max(i) <= min(j)``; the empty index is the identity.

    Raises:
        OrderViolationError: when the result would not be nondecreasing.
    """
    i = i if isinstance(i, MultiIndex) else MultiIndex(i)
    j = j if isinstance(j, MultiIndex) else MultiIndex(j)
    if i and j and i[-1] > j[0]:
        raise OrderViolationError(f"Cannot concatenate {tuple(i)} and {tuple(j)}: {i[-1]} > {j[0]}")
    return MultiIndex._trusted(tuple(i) + tuple(j))


def index_to_json(j: Sequence[int]) -> list:
    return [int(e) for e in j]


def index_from_json(data: Sequence[int]) -> MultiIndex:
    if not isinstance(data, (list, tuple)):
        raise ValueError(f"A multi-index is encoded as a JSON array, got {data!r}")
    return MultiIndex(data)
