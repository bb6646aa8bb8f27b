import math
from functools import cached_property
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from monomial_lab._errors import DimensionError, OrderViolationError
from monomial_lab._util import compensated_complex_sum
from monomial_lab.index import ExponentVector, MultiIndex, from_exponent, to_exponent

Terms = Union[Mapping[Sequence[int], complex], Iterable[Tuple[Sequence[int], complex]]]


class SparsePolynomial:
    """Finite sum ``P = sum_j c_j z_j`` over multi-indices.

    Coefficients are complex doubles. Duplicate indices are added up and
    zero coefficients are dropped; the terms are kept in lexicographic order
    of their indices. Instances are not meant to be mutated.

    Examples:
        >>> P = SparsePolynomial({(1, 2): 1.0})
        >>> P.homogeneous_degree
        2
    """

    __slots__ = ("__dict__", "_coeffs")

    def __init__(self, terms: Terms = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged = {}
        for index, value in items:
            j = index if isinstance(index, MultiIndex) else MultiIndex(index)
            merged[j] = merged.get(j, 0j) + complex(value)
        self._coeffs = MappingProxyType({j: merged[j] for j in sorted(merged) if merged[j] != 0})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coefficient: complex = 1.0) -> "SparsePolynomial":
        """``coefficient * z^alpha`` from an exponent vector."""
        return cls({from_exponent(alpha): coefficient})

    @property
    def coeffs(self) -> Mapping[MultiIndex, complex]:
        return self._coeffs

    @cached_property
    def indices(self) -> Tuple[MultiIndex, ...]:
        return tuple(self._coeffs)

    @cached_property
    def homogeneous_degree(self) -> Optional[int]:
        """The common length of all indices, ``None`` when they differ or there are none."""
        degrees = {len(j) for j in self._coeffs}
        return degrees.pop() if len(degrees) == 1 else None

    @cached_property
    def max_degree(self) -> int:
        return max((len(j) for j in self._coeffs), default=0)

    @cached_property
    def n_vars(self) -> int:
        """Largest variable that occurs (0 for constants)."""
        return max((j.max_entry for j in self._coeffs), default=0)

    def coefficient(self, j: Sequence[int]) -> complex:
        return self._coeffs.get(j if isinstance(j, MultiIndex) else MultiIndex(j), 0j)

    def exponent(self, j: Sequence[int]) -> ExponentVector:
        return to_exponent(j)

    def items(self):
        return self._coeffs.items()

    def exponent_matrix(self, n: Optional[int] = None) -> np.ndarray:
        """``(terms, n)`` integer matrix of exponent vectors."""
        n = self.n_vars if n is None else n
        if n < self.n_vars:
            raise DimensionError(f"Polynomial uses {self.n_vars} variables, got dimension {n}")
        matrix = np.zeros((len(self), n), dtype=np.int64)
        for row, j in enumerate(self._coeffs):
            for e in j:
                matrix[row, e - 1] += 1
        return matrix

    def coefficient_array(self) -> np.ndarray:
        return np.fromiter(self._coeffs.values(), dtype=np.complex128, count=len(self))

    def abs_sum(self) -> float:
        return math.fsum(abs(c) for c in self._coeffs.values())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[MultiIndex]:
        return iter(self._coeffs)

    def __contains__(self, j) -> bool:
        return j in self._coeffs

    def __getitem__(self, j) -> complex:
        return self.coefficient(j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        shown = ", ".join(f"{tuple(j)}: {c}" for j, c in list(self._coeffs.items())[:4])
        more = ", ..." if len(self) > 4 else ""
        return f"SparsePolynomial({{{shown}{more}}})"


def _as_vector(u, name: str = "u") -> np.ndarray:
    vector = np.asarray(u, dtype=np.complex128)
    if vector.ndim != 1:
        raise DimensionError(f"{name} must be a vector, got shape {vector.shape}")
    return vector


def monomial_values(indices: Iterable[Sequence[int]], u: np.ndarray) -> Iterator[complex]:
    values = u.tolist()
    for j in indices:
        yield math.prod((values[e - 1] for e in j), start=1 + 0j)


def evaluate(P: SparsePolynomial, u) -> complex:
    """``P(u) = sum_j c_j u_{j_1} ... u_{j_m}`` with compensated summation.

    Raises:
        DimensionError: if ``u`` is shorter than the largest variable of ``P``.
    """
    u = _as_vector(u)
    if len(u) < P.n_vars:
        raise DimensionError(f"Point has dimension {len(u)}, polynomial needs {P.n_vars}")
    terms = (c * value for c, value in zip(P.coeffs.values(), monomial_values(P.indices, u)))
    return compensated_complex_sum(terms)


def transfer_coefficients(f: SparsePolynomial, w) -> SparsePolynomial:
    """``f_w`` with ``c_alpha(f_w) = w^alpha c_alpha(f)``, so ``f_w(u) = f(u * w)``."""
    w = _as_vector(w, "w")
    if len(w) < f.n_vars:
        raise DimensionError(f"Weight vector has dimension {len(w)}, polynomial needs {f.n_vars}")
    return SparsePolynomial(
        (j, c * value) for (j, c), value in zip(f.items(), monomial_values(f.indices, w))
    )


def restrict_prefix(P: SparsePolynomial, i: Sequence[int], l: int) -> SparsePolynomial:  # noqa: E741
    """The part of ``P`` whose indices split as ``(i, j)`` with every entry of ``j`` above ``l``."""
    i = i if isinstance(i, MultiIndex) else MultiIndex(i)
    if i and i.max_entry > l:
        raise OrderViolationError(f"Prefix {tuple(i)} has entries above l={l}")
    size = len(i)
    kept = {}
    for k, c in P.items():
        if tuple(k[:size]) != tuple(i):
            continue
        if len(k) == size or k[size] > l:
            kept[k] = c
    return SparsePolynomial(kept)


Coefficients = Union[SparsePolynomial, Mapping[Sequence[int], complex], Callable[[MultiIndex], complex]]


def coefficient_lookup(coeffs: Coefficients) -> Callable[[MultiIndex], complex]:
    """Uniform ``j -> c_j`` accessor over polynomials, mappings and callables (missing means 0)."""
    if isinstance(coeffs, SparsePolynomial):
        return coeffs.coefficient
    if isinstance(coeffs, Mapping):
        return lambda j: coeffs.get(j, 0)
    if callable(coeffs):
        return coeffs
    raise TypeError(f"Expected a polynomial, a mapping or a callable, got {type(coeffs).__name__}")
