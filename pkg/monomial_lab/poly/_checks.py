"""Numerical verification of the coefficient inequalities for polynomials on ``ℓ_r^n``.

Each check evaluates both sides with the certified upper end of the
sup-norm bracket, so a failed record can only come from an implementation
error, never from a weak norm estimate. The ratio against the lower end is
reported as ``sharp_ratio`` to show how tight the inequality is.
"""

import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import groupby
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from monomial_lab._constants import KQ_SUM_RTOL, REL_TOL, CheckStatus, Inequality
from monomial_lab._errors import DomainError
from monomial_lab._settings import LOGGER
from monomial_lab._util import compensated_sum, relative_difference
from monomial_lab.bounds import chi_upper
from monomial_lab.index import MultiIndex, WeightedFamilySpec, enumerate_family, kq_partition, multiplicity, reduce
from monomial_lab.poly._ball import BallSpec
from monomial_lab.poly._norm import SupNormBudget, SupNormEstimate, monomial_sup_norm, sup_norm
from monomial_lab.poly._points import ModulusTable, as_point
from monomial_lab.poly._polynomial import Coefficients, SparsePolynomial, coefficient_lookup
from monomial_lab.weights import weight_sequence


@dataclass
class CheckRecord:
    key: Any
    lhs: float
    rhs: float
    rhs_lower: Optional[float] = None
    form: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs * (1 + REL_TOL)

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def ratio(self) -> float:
        return _ratio(self.lhs, self.rhs)

    def to_dict(self) -> Dict[str, Any]:
        data = {"key": self.key, "lhs": self.lhs, "rhs": self.rhs, "margin": self.margin, "passed": self.passed}
        if self.form is not None:
            data["form"] = self.form
        return data


def _ratio(lhs: float, rhs: Optional[float]) -> float:
    if rhs is None:
        return math.nan
    if rhs == 0:
        return 0.0 if lhs == 0 else math.inf
    return lhs / rhs


@dataclass
class CheckReport:
    """Outcome of one inequality check.

    ``inequality`` is the name carried into failure records; ``status`` is
    ``passed`` when every record satisfies ``lhs <= rhs (1 + 1e-12)``.
    """

    inequality: Inequality
    status: CheckStatus
    records: List[CheckRecord] = field(default_factory=list)
    lower: Optional[float] = None
    upper: Optional[float] = None
    inputs: Dict[str, Any] = field(default_factory=dict)
    reason: Optional[str] = None

    @classmethod
    def from_records(cls, inequality: Inequality, records: List[CheckRecord], **kwargs) -> "CheckReport":
        status = CheckStatus.PASSED if all(record.passed for record in records) else CheckStatus.FAILED
        report = cls(inequality, status, records, **kwargs)
        log = LOGGER.warning if status is CheckStatus.FAILED else LOGGER.info
        log(f"{inequality.value}: {status.value} on {len(records)} records, worst ratio {report.worst_ratio:.6g}")
        return report

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAILED

    @property
    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    @property
    def worst_ratio(self) -> float:
        return max((record.ratio for record in self.records), default=0.0)

    @property
    def sharp_ratio(self) -> float:
        """Largest ``lhs / rhs`` with the lower norm estimate in place of the upper one."""
        return max((_ratio(record.lhs, record.rhs_lower) for record in self.records), default=0.0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inequality": self.inequality.value,
            "status": self.status.value,
            "lower": self.lower,
            "upper": self.upper,
            "worst_ratio": self.worst_ratio,
            "sharp_ratio": self.sharp_ratio,
            "inputs": self.inputs,
            "reason": self.reason,
            "records": [record.to_dict() for record in self.records],
        }


def _homogeneous_degree(P: SparsePolynomial, minimum: int = 1) -> int:
    m = P.homogeneous_degree
    if m is None:
        raise DomainError("The check needs a nonzero homogeneous polynomial")
    if m < minimum:
        raise DomainError(f"The check needs degree at least {minimum}, got {m}")
    return m


def _estimate(P, spec, budget, estimate, threads) -> SupNormEstimate:
    return estimate if estimate is not None else sup_norm(P, spec, budget, threads=threads)


def cauchy_bound_check(
    P: SparsePolynomial,
    spec: BallSpec,
    budget: Optional[SupNormBudget] = None,
    estimate: Optional[SupNormEstimate] = None,
    threads: Optional[int] = None,
) -> CheckReport:
    """``|c_alpha| <= (m^m / alpha^alpha)^(1/r) ||P||`` and ``|c_j| <= e^(m/r) |j|^(1/r) ||P||`` per index."""
    m = _homogeneous_degree(P)
    estimate = _estimate(P, spec, budget, estimate, threads)
    records = []
    for j, c in P.items():
        factor = 1.0 / monomial_sup_norm(spec, P.exponent(j))
        records.append(CheckRecord(list(j), abs(c), factor * estimate.upper, factor * estimate.lower, "alpha"))
    for j, c in P.items():
        factor = math.exp(m * spec.inv_r) * multiplicity(j) ** spec.inv_r
        records.append(
            CheckRecord(list(j), abs(c), factor * estimate.upper, factor * estimate.lower, "multiplicity")
        )
    return CheckReport.from_records(
        Inequality.CAUCHY, records, lower=estimate.lower, upper=estimate.upper, inputs={"ball": spec.to_dict(), "m": m}
    )


def mixed_norm_check(
    P: SparsePolynomial,
    spec: BallSpec,
    budget: Optional[SupNormBudget] = None,
    estimate: Optional[SupNormEstimate] = None,
    threads: Optional[int] = None,
) -> CheckReport:
    """Mixed-norm coefficient estimates.

    For ``r <= 2``, per prefix ``j`` of length ``m - 1``:
    ``||(c_(j,k))_k||_(r') <= m e^(1 + (m-1)/r) |j|^(1/r) ||P||``.
    For ``r = inf``: ``sum_k (sum_j |c_(j,k)|^2)^(1/2) <= e m 2^((m-1)/2) ||P||``.
    For ``2 < r < inf`` there is no estimate and the report is ``not-applicable``.
    """
    m = _homogeneous_degree(P, minimum=2)
    inputs = {"ball": spec.to_dict(), "m": m}
    if not (spec.r <= 2 or spec.is_infinite):
        return CheckReport(
            Inequality.MIXED_R_LE_2,
            CheckStatus.NOT_APPLICABLE,
            inputs=inputs,
            reason="no mixed-norm estimate for 2 < r < inf",
        )
    estimate = _estimate(P, spec, budget, estimate, threads)
    records = []
    if spec.is_infinite:
        columns = defaultdict(list)
        for j, c in P.items():
            columns[j[-1]].append(abs(c) ** 2)
        lhs = compensated_sum(math.sqrt(compensated_sum(column)) for _, column in sorted(columns.items()))
        factor = math.e * m * 2.0 ** ((m - 1) / 2)
        records.append(CheckRecord("all", lhs, factor * estimate.upper, factor * estimate.lower))
        inequality = Inequality.MIXED_R_INF
    else:
        r_prime = spec.conjugate
        for prefix, group in groupby(P.items(), key=lambda item: tuple(item[0][:-1])):
            moduli = [abs(c) for _, c in group]
            if math.isinf(r_prime):
                lhs = max(moduli)
            else:
                lhs = compensated_sum(value**r_prime for value in moduli) ** (1.0 / r_prime)
            factor = m * math.exp(1 + (m - 1) * spec.inv_r) * multiplicity(prefix) ** spec.inv_r
            records.append(CheckRecord(list(prefix), lhs, factor * estimate.upper, factor * estimate.lower))
        inequality = Inequality.MIXED_R_LE_2
    return CheckReport.from_records(inequality, records, lower=estimate.lower, upper=estimate.upper, inputs=inputs)


def weighted_sum(coeffs: Coefficients, u, J: Iterable[Sequence[int]]) -> float:
    """``sum_{j in J} |c_j| |u_j|`` with compensated summation; ``J`` is consumed lazily.

    Raises:
        DimensionError: when ``u`` has no coordinate needed by some ``j``.
    """
    lookup = coefficient_lookup(coeffs)
    table = ModulusTable(u)

    def terms():
        for j in J:
            j = j if isinstance(j, MultiIndex) else MultiIndex(j)
            c = lookup(j)
            if c:
                yield abs(c) * table.monomial(j)

    return compensated_sum(terms())


def thm_monomial_check(
    P: SparsePolynomial,
    spec: BallSpec,
    J: Iterable[Sequence[int]],
    u,
    budget: Optional[SupNormBudget] = None,
    estimate: Optional[SupNormEstimate] = None,
    threads: Optional[int] = None,
) -> CheckReport:
    """``sum_{j in J} |c_j| |u_j| <= C(m, r) |J*|^sigma ||u||_r^m ||P||``.

    ``||u||_r`` is taken over the first ``spec.n`` coordinates (or all of
    them for shorter explicit points). An empty ``J`` passes trivially.
    """
    J = sorted({j if isinstance(j, MultiIndex) else MultiIndex(j) for j in J})
    point = as_point(u)
    inputs = {"ball": spec.to_dict(), "index_count": len(J), "point": point.to_dict()}
    if not J:
        return CheckReport.from_records(Inequality.MONOMIAL, [CheckRecord("empty", 0.0, 0.0, 0.0)], inputs=inputs)
    m = P.homogeneous_degree if P.homogeneous_degree is not None else len(J[0])
    J_star = reduce(J, m)
    estimate = _estimate(P, spec, budget, estimate, threads)
    count = spec.n if point.dimension is None else min(spec.n, point.dimension)
    norm_u = point.norm(spec.r_float, count)
    lhs = weighted_sum(P, point, J)
    factor = chi_upper(m, spec.r, len(J_star)) * norm_u**m
    inputs.update({"m": m, "j_star_size": len(J_star), "u_norm": norm_u})
    return CheckReport.from_records(
        Inequality.MONOMIAL,
        [CheckRecord("J", lhs, factor * estimate.upper, factor * estimate.lower)],
        lower=estimate.lower,
        upper=estimate.upper,
        inputs=inputs,
    )


def kq_sum(coeffs: Coefficients, u, seq, x: float, y: float, cap: Optional[int] = None) -> Tuple[float, float]:
    """``sum_{q_k <= x} |c_k u_k|`` directly and through the ``(i, m, j)`` decomposition.

    The decomposed value sums over ``j`` for each ``(i, m)``, then over ``m``,
    then over ``i``. Both agree up to summation-order roundoff.
    """
    seq = weight_sequence(seq)
    lookup = coefficient_lookup(coeffs)
    table = ModulusTable(u)
    direct = compensated_sum(
        abs(lookup(k)) * table.monomial(k) for k in enumerate_family(WeightedFamilySpec(seq, x), cap=cap)
    )
    outer = []
    for i, triples in groupby(kq_partition(seq, x, y, cap=cap), key=lambda triple: triple[0]):
        u_i = table.monomial(i)
        by_degree = defaultdict(list)
        for _, m, j in triples:
            by_degree[m].append(abs(lookup(MultiIndex._trusted(i + j))) * table.monomial(j))
        inner = [compensated_sum(values) for _, values in sorted(by_degree.items())]
        outer.append(u_i * compensated_sum(inner))
    decomposed = compensated_sum(outer)
    difference = relative_difference(direct, decomposed)
    if difference > KQ_SUM_RTOL:
        LOGGER.warning(f"kq_sum disagreement {difference:.3g} at x={x}, y={y}")
    return direct, decomposed


def kq_sum_report(coeffs: Coefficients, u, seq, x: float, y: float, cap: Optional[int] = None) -> CheckReport:
    """:func:`kq_sum` as a check with relative tolerance ``1e-10``."""
    direct, decomposed = kq_sum(coeffs, u, seq, x, y, cap=cap)
    scale = max(abs(direct), abs(decomposed))
    record = CheckRecord("sum", abs(direct - decomposed), KQ_SUM_RTOL * scale, form="relative-difference")
    return CheckReport.from_records(
        Inequality.KQ_PARTITION,
        [record],
        inputs={"weights": weight_sequence(seq).label, "x": x, "y": y, "direct": direct, "decomposed": decomposed},
    )
