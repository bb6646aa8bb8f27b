"""Weighted index families.

For a weight sequence ``q`` and ``x > 2``:

- ``J(x)``: every index ``j`` with ``q_j <= x``, the empty index included;
- ``J(x, m)``: the elements of ``J(x)`` of length ``m``;
- ``J-(x; y)``: elements of ``J(x)`` whose entries are all ``<= l``;
- ``J+(x, m; y)``: elements of ``J(x, m)`` whose entries are all ``> l``;

where ``l`` is the cutoff rank of ``y`` (``q_l <= y < q_{l+1}``). Ties
``q_j = x`` belong to the families. Enumeration is a depth-first walk over
nondecreasing tuples that stops a branch as soon as the running product
exceeds ``x``, so the cost is linear in the output.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from monomial_lab._calibration import landau_constant, prime_plus_constant
from monomial_lab._constants import REL_TOL, Family, Inequality
from monomial_lab._errors import CapExceededError, DomainError, MembershipError
from monomial_lab._settings import LOGGER, MAX_ELEMENTS
from monomial_lab._util import ordered_map
from monomial_lab.index._core import EMPTY, MultiIndex, concat, reduce
from monomial_lab.weights import KLogSequence, WeightSequence, g_theta, weight_sequence


@dataclass(frozen=True)
class WeightedFamilySpec:
    """Which family to enumerate.

    Attributes:
        seq: Weight sequence (an instance or a label such as ``"klog:0.75"``).
        x: Weight budget, ``x > 2``.
        family: One of ``jx``, ``jxm``, ``jminus``, ``jplus``.
        y: Cutoff parameter, required for ``jminus``/``jplus``, ``2 < y < x``.
        m: Degree, required for ``jxm``/``jplus``.
        margin: Relative slack added to ``x`` in membership tests, for auditing
            boundary sensitivity of floating weights. Zero by default.
    """

    seq: WeightSequence
    x: float
    family: Family = Family.JX
    y: Optional[float] = None
    m: Optional[int] = None
    margin: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "seq", weight_sequence(self.seq))
        object.__setattr__(self, "family", Family(self.family))
        if not self.x > 2:
            raise DomainError(f"Family budgets need x > 2, got x={self.x}")
        if self.family in (Family.JMINUS, Family.JPLUS):
            if self.y is None:
                raise ValueError(f"Family {self.family.value} needs y")
            if not 2 < self.y < self.x:
                raise DomainError(f"Expected 2 < y < x, got y={self.y}, x={self.x}")
        if self.family in (Family.JXM, Family.JPLUS):
            if self.m is None:
                raise ValueError(f"Family {self.family.value} needs m")
            if self.m < 0:
                raise DomainError(f"m must be nonnegative, got {self.m}")
        if self.margin < 0:
            raise DomainError(f"margin must be nonnegative, got {self.margin}")

    @property
    def l(self) -> int:  # noqa: E743
        return 0 if self.y is None else self.seq.cutoff_rank(self.y)

    @property
    def limit(self) -> float:
        return self.x * (1 + self.margin)

    def to_dict(self) -> dict:
        return {
            "weights": self.seq.label,
            "family": self.family.value,
            "x": self.x,
            "y": self.y,
            "m": self.m,
            "l": self.l,
            "margin": self.margin,
        }


@dataclass
class FamilyCensus:
    """Exact size of a family together with the applicable size bound."""

    spec: WeightedFamilySpec
    cardinality: int
    by_degree: Dict[int, int]
    analytic_bound: Optional[float] = None
    bound_name: Optional[str] = None
    bound_satisfied: Optional[bool] = None
    empirical_constants: Dict[str, float] = field(default_factory=dict)
    extras: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            **self.spec.to_dict(),
            "cardinality": self.cardinality,
            "by_degree": {str(k): v for k, v in sorted(self.by_degree.items())},
            "analytic_bound": self.analytic_bound,
            "bound_name": self.bound_name,
            "bound_satisfied": self.bound_satisfied,
            "empirical_constants": dict(self.empirical_constants),
            "extras": dict(self.extras),
        }


def _walk(
    terms: Sequence,
    limit: float,
    hi: int,
    length: Optional[int],
    prefix: tuple,
    weight,
    start: int,
) -> Iterator[tuple]:
    if length is None:
        yield prefix
    elif len(prefix) == length:
        yield prefix
        return
    remaining = None if length is None else length - len(prefix)
    for k in range(start, hi + 1):
        q = terms[k - 1]
        extended = weight * q
        if remaining is None or remaining == 1:
            if extended > limit:
                break
        elif weight * q**remaining > limit:
            break
        yield from _walk(terms, limit, hi, length, prefix + (k,), extended, k)


def _family_frame(spec: WeightedFamilySpec) -> Tuple[List, int, int, Optional[int], bool]:
    """Terms table, entry range ``[lo, hi]``, fixed length and whether ϑ belongs."""
    terms = spec.seq.terms_upto(spec.limit)
    l = spec.l  # noqa: E741
    if spec.family is Family.JX:
        return terms, 1, len(terms), None, True
    if spec.family is Family.JXM:
        return terms, 1, len(terms), spec.m, spec.m == 0
    if spec.family is Family.JMINUS:
        return terms, 1, min(l, len(terms)), None, True
    return terms, l + 1, len(terms), spec.m, spec.m == 0


def _subtree(terms, limit, hi, length, k) -> Iterator[tuple]:
    q = terms[k - 1]
    if length == 0:
        return iter(())
    if length is None or length == 1:
        if q > limit:
            return iter(())
    elif q**length > limit:
        return iter(())
    return _walk(terms, limit, hi, length, (k,), q, k)


def _capped(stream: Iterable[tuple], cap: int, what: str) -> Iterator[MultiIndex]:
    count = 0
    for entries in stream:
        count += 1
        if count > cap:
            raise CapExceededError(f"Enumeration of {what} exceeds the element cap {cap}")
        yield MultiIndex._trusted(entries)


def enumerate_family(spec: WeightedFamilySpec, cap: Optional[int] = None) -> Iterator[MultiIndex]:
    """Stream the indices of a family in lexicographic order, each exactly once.

    Raises:
        CapExceededError: when more than ``cap`` indices are produced.
    """
    terms, lo, hi, length, with_empty = _family_frame(spec)
    cap = MAX_ELEMENTS if cap is None else cap

    def stream():
        if with_empty:
            yield ()
        if length == 0:
            return
        for k in range(lo, hi + 1):
            # first entries are increasing, so once one fails all later ones do
            first = _subtree(terms, spec.limit, hi, length, k)
            produced = False
            for entries in first:
                produced = True
                yield entries
            if not produced:
                break

    return _capped(stream(), cap, f"{spec.family.value}(x={spec.x})")


def jminus_size_bound(seq: WeightSequence, x: float, l: int) -> float:  # noqa: E741
    """``(1 + log x / log q_1)^l``."""
    return (1 + math.log(x) / math.log(seq.term(1))) ** l


def jminus_sharp_bound(seq: WeightSequence, x: float, l: int) -> float:  # noqa: E741
    """``prod_{k <= l} (1 + log x / log q_k)``, one exponent range per coordinate."""
    return math.prod(1 + math.log(x) / math.log(seq.term(k)) for k in range(1, l + 1))


def jplus_growth(seq: WeightSequence, x: float, c: Optional[float] = None) -> Tuple[float, float]:
    """``g(x) + c`` of the J+ size bound and the constant ``c`` used.

    For the ``klog`` family ``g = g_theta`` and ``c`` defaults to
    ``1/q_1 + 1/q_2 + 1/q_3``; for primes ``g = log log x`` and ``c`` defaults
    to the calibrated constant.
    """
    if isinstance(seq, KLogSequence):
        c = seq.reciprocal_constant() if c is None else c
        return g_theta(x, seq.theta) + c, c
    c = prime_plus_constant() if c is None else c
    return g_theta(x, 1.0) + c, c


def jplus_size_bound(seq: WeightSequence, x: float, m: int, y: float, c: Optional[float] = None) -> float:
    """``x y^(-m) exp(y (g(x) + c))``; ``1`` for ``m = 0``."""
    if m == 0:
        return 1.0
    growth, _ = jplus_growth(seq, x, c)
    return math.exp(math.log(x) - m * math.log(y) + y * growth)


def landau_size_bound(x: float, m: int, constant: Optional[float] = None) -> float:
    """``C_m x / log x (log log x)^(m-1)``."""
    constant = landau_constant(m) if constant is None else constant
    return constant * x / math.log(x) * math.log(math.log(x)) ** (m - 1)


def max_degree(seq: WeightSequence, x: float) -> int:
    """Largest ``m`` with ``J(x, m)`` possibly nonempty, ``floor(log x / log q_1)``."""
    return int(math.floor(math.log(x) / math.log(seq.term(1))))


def _count_by_degree(spec: WeightedFamilySpec, threads: Optional[int], cap: int) -> Dict[int, int]:
    terms, lo, hi, length, with_empty = _family_frame(spec)
    by_degree: Dict[int, int] = {}
    if with_empty:
        by_degree[0] = 1
    if length == 0:
        return by_degree

    def count(k: int) -> Dict[int, int]:
        local: Dict[int, int] = {}
        for entries in _subtree(terms, spec.limit, hi, length, k):
            local[len(entries)] = local.get(len(entries), 0) + 1
        return local

    firsts = []
    for k in range(lo, hi + 1):
        q = terms[k - 1]
        if (q if length is None else q**length) > spec.limit:
            break
        firsts.append(k)
    total = sum(by_degree.values())
    for local in ordered_map(count, firsts, threads):
        for degree, value in local.items():
            by_degree[degree] = by_degree.get(degree, 0) + value
            total += value
        if total > cap:
            raise CapExceededError(f"Census of {spec.family.value}(x={spec.x}) exceeds the element cap {cap}")
    return by_degree


def census(
    spec: WeightedFamilySpec,
    c: Optional[float] = None,
    landau_c: Optional[float] = None,
    threads: Optional[int] = None,
    cap: Optional[int] = None,
) -> FamilyCensus:
    """Exact counts of a family and the size bound that applies to it.

    Bounds: ``floor(x)`` for ``J(x)`` over the primes; zero for ``J(x, m)``
    with ``m > log x / log q_1``; the Landau-type bound for ``J(x, m)`` over
    the primes; ``(1 + log x/log q_1)^l`` for ``J-``; and
    ``x y^(-m) exp(y (g(x) + c))`` for ``J+``. Constants the statements only
    assert to exist are taken from the calibration file unless passed and
    listed under ``empirical_constants``.

    The counting may run on several threads, split by first entry; the
    result does not depend on the thread count.
    """
    cap = MAX_ELEMENTS if cap is None else cap
    by_degree = _count_by_degree(spec, threads, cap)
    result = FamilyCensus(spec=spec, cardinality=sum(by_degree.values()), by_degree=by_degree)
    seq, x = spec.seq, spec.x

    if spec.family is Family.JX:
        if seq.exact:
            result.analytic_bound = float(math.floor(x))
            result.bound_name = "prime-bijection"
    elif spec.family is Family.JXM:
        if spec.m > math.log(x) / math.log(seq.term(1)):
            result.analytic_bound = 0.0
            result.bound_name = Inequality.EMPTY_DEGREE.value
        elif seq.exact and spec.m >= 1 and x > math.e:
            constant = landau_constant(spec.m) if landau_c is None else landau_c
            result.analytic_bound = landau_size_bound(x, spec.m, constant)
            result.bound_name = Inequality.LANDAU.value
            result.empirical_constants["landau_c"] = constant
    elif spec.family is Family.JMINUS:
        result.analytic_bound = jminus_size_bound(seq, x, spec.l)
        result.bound_name = Inequality.JMINUS_SIZE.value
        result.extras["sharp_bound"] = jminus_sharp_bound(seq, x, spec.l)
    else:
        growth, used_c = jplus_growth(seq, x, c)
        result.analytic_bound = jplus_size_bound(seq, x, spec.m, spec.y, used_c)
        result.bound_name = Inequality.JPLUS_SIZE.value
        if seq.exact and c is None:
            result.empirical_constants["c"] = used_c
        else:
            result.extras["c"] = used_c

    if result.analytic_bound is not None:
        result.bound_satisfied = result.cardinality <= result.analytic_bound
        if not result.bound_satisfied:
            LOGGER.warning(
                f"{result.bound_name}: |{spec.family.value}| = {result.cardinality} exceeds {result.analytic_bound:.6g}"
            )
    LOGGER.info(f"Census {spec.family.value}(x={x}, y={spec.y}, m={spec.m}) over {seq.label}: {result.cardinality}")
    return result


def kq_decompose(seq, x: float, y: float, k: Sequence[int]) -> Tuple[MultiIndex, int, MultiIndex]:
    """Split ``k`` in ``J(x)`` as ``(i, j)`` with entries of ``i`` ``<= l`` and of ``j`` ``> l``.

    Returns:
        ``(i, m, j)`` with ``m = len(j)``.

    Raises:
        MembershipError: if ``q_k > x``.
    """
    seq = weight_sequence(seq)
    if not 2 < y < x:
        raise DomainError(f"Expected 2 < y < x, got y={y}, x={x}")
    k = k if isinstance(k, MultiIndex) else MultiIndex(k)
    if seq.index_weight(k) > x:
        raise MembershipError(f"q_k = {seq.index_weight(k)} exceeds x = {x} for k = {tuple(k)}")
    split = bisect_right(k, seq.cutoff_rank(y))
    i = MultiIndex._trusted(tuple(k[:split]))
    j = MultiIndex._trusted(tuple(k[split:]))
    return i, len(j), j


def _below_power(seq: WeightSequence, j: Sequence[int], x: float, m: int) -> bool:
    # q_j <= x^((m-1)/m)
    weight = seq.index_weight(j)
    if seq.exact:
        return weight**m <= Fraction(x) ** (m - 1)
    return m * math.log(weight) <= (m - 1) * math.log(x) + REL_TOL * max(1.0, abs(math.log(x)))


def reduced_inclusion_violations(
    seq, x: float, m: int, y: Optional[float] = None, cap: Optional[int] = None
) -> List[MultiIndex]:
    """Elements of ``J(x, m)*`` (or ``J+(x, m; y)*``) outside ``J(x^((m-1)/m), m-1)`` (or its J+ analogue)."""
    seq = weight_sequence(seq)
    if m < 2:
        raise DomainError(f"The reduced inclusion needs m >= 2, got {m}")
    family = Family.JXM if y is None else Family.JPLUS
    spec = WeightedFamilySpec(seq, x, family, y=y, m=m)
    reduced = reduce(enumerate_family(spec, cap=cap), m)
    l = spec.l  # noqa: E741
    violations = []
    for j in sorted(reduced):
        inside = _below_power(seq, j, x, m)
        if y is not None:
            inside = inside and all(e > l for e in j)
        if not inside:
            violations.append(j)
    if violations:
        LOGGER.warning(f"Reduced inclusion fails for {len(violations)} indices, first {tuple(violations[0])}")
    return violations


def verify_reduced_inclusion(seq, x: float, m: int, y: Optional[float] = None, cap: Optional[int] = None) -> bool:
    """Whether ``J(x, m)* ⊂ J(x^((m-1)/m), m-1)``, or the J+ analogue when ``y`` is given."""
    return not reduced_inclusion_violations(seq, x, m, y=y, cap=cap)


def kq_partition(seq, x: float, y: float, cap: Optional[int] = None) -> Iterator[Tuple[MultiIndex, int, MultiIndex]]:
    """Stream the triples ``(i, m, j)`` with ``i`` in ``J-(x; y)``, ``j`` in ``J+(x, m; y)`` and ``q_(i,j) <= x``.

    The weight of ``(i, j)`` is accumulated in the same order as in the
    direct enumeration of ``J(x)``, so floating membership decisions agree.
    """
    seq = weight_sequence(seq)
    spec = WeightedFamilySpec(seq, x, Family.JMINUS, y=y)
    terms = seq.terms_upto(x)
    l = spec.l  # noqa: E741
    cap = MAX_ELEMENTS if cap is None else cap
    count = 0
    for i in enumerate_family(spec, cap=cap):
        weight = seq.index_weight(i)
        for entries in _walk(terms, x, len(terms), None, (), weight, l + 1):
            count += 1
            if count > cap:
                raise CapExceededError(f"KQ partition of J({x}) exceeds the element cap {cap}")
            j = MultiIndex._trusted(entries)
            yield i, len(j), j


@dataclass
class KQPartitionReport:
    direct_count: int
    partition_count: int
    duplicates: int
    missing: int
    extra: int

    @property
    def passed(self) -> bool:
        return (
            self.direct_count == self.partition_count and self.duplicates == 0 and self.missing == 0 and self.extra == 0
        )

    def to_dict(self) -> dict:
        return {
            "direct_count": self.direct_count,
            "partition_count": self.partition_count,
            "duplicates": self.duplicates,
            "missing": self.missing,
            "extra": self.extra,
            "passed": self.passed,
        }


def verify_kq_partition(seq, x: float, y: float, cap: Optional[int] = None) -> KQPartitionReport:
    """Check that ``(i, j) -> concat(i, j)`` is a bijection onto ``J(x)``."""
    seq = weight_sequence(seq)
    direct = set(enumerate_family(WeightedFamilySpec(seq, x, Family.JX), cap=cap))
    seen = set()
    duplicates = 0
    for i, _, j in kq_partition(seq, x, y, cap=cap):
        k = concat(i, j)
        if k in seen:
            duplicates += 1
        seen.add(k)
    report = KQPartitionReport(
        direct_count=len(direct),
        partition_count=len(seen) + duplicates,
        duplicates=duplicates,
        missing=len(direct - seen),
        extra=len(seen - direct),
    )
    LOGGER.info(f"KQ partition of J({x}) with y={y}: {report.to_dict()}")
    return report


def calibrate_prime_constant(
    xs: Iterable[float], ys: Iterable[float], ms: Iterable[int], cap: Optional[int] = None
) -> float:
    """Smallest ``c`` making the prime J+ size bound hold on the grid (``-inf`` if nothing constrains it)."""
    seq = weight_sequence("primes")
    ys, ms = list(ys), list(ms)
    needed = -math.inf
    for x in xs:
        for y in ys:
            if not 2 < y < x:
                continue
            for m in ms:
                if m < 1:
                    continue
                size = census(WeightedFamilySpec(seq, x, Family.JPLUS, y=y, m=m), c=0.0, cap=cap).cardinality
                if size == 0:
                    continue
                c = (math.log(size) + m * math.log(y) - math.log(x)) / y - math.log(math.log(x))
                needed = max(needed, c)
    return needed


def calibrate_landau_constant(m: int, xs: Iterable[float], cap: Optional[int] = None, threads=None) -> float:
    """Largest ratio ``|J(x, m)| / (x / log x (log log x)^(m-1))`` over the grid, for the primes."""
    seq = weight_sequence("primes")
    ratio = 0.0
    for x in xs:
        size = census(WeightedFamilySpec(seq, x, Family.JXM, m=m), cap=cap, threads=threads).cardinality
        ratio = max(ratio, size / landau_size_bound(x, m, 1.0))
    return ratio
