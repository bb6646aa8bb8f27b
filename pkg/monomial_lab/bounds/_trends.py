"""Desk-scale trend probes of the asymptotic statements.

The asymptotics cannot be observed as limits at reachable sizes, so these
probes evaluate the explicit bounds on a grid and fit least-squares slopes
(``scipy.stats.linregress``). They emit data; callers decide what to assert.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from scipy import stats

from monomial_lab._constants import HVariant
from monomial_lab._errors import DomainError
from monomial_lab._exponents import parse_r, r_label, sigma
from monomial_lab.bounds._formulas import bohr_lower_bound, h_maximizer, kq_master_bound
from monomial_lab.weights import KLogSequence, weight_sequence


@dataclass
class TrendFit:
    """Least-squares line ``y = slope * x + intercept``."""

    slope: float
    intercept: float
    rvalue: float
    stderr: float
    target: Optional[float] = None

    @classmethod
    def fit(cls, xs: Sequence[float], ys: Sequence[float], target: Optional[float] = None) -> "TrendFit":
        if len(xs) < 2:
            raise ValueError("A trend fit needs at least two points")
        result = stats.linregress(xs, ys)
        return cls(float(result.slope), float(result.intercept), float(result.rvalue), float(result.stderr), target)

    def within(self, tolerance: float) -> bool:
        if self.target is None:
            raise ValueError("This fit has no target slope")
        return abs(self.slope - self.target) <= tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "rvalue": self.rvalue,
            "stderr": self.stderr,
            "target": self.target,
        }


@dataclass
class TrendProbe:
    name: str
    inputs: Dict[str, Any]
    rows: List[Dict[str, Any]]
    fits: Dict[str, TrendFit] = field(default_factory=dict)

    def columns(self) -> List[str]:
        keys: List[str] = []
        for row in self.rows:
            keys.extend(key for key in row if key not in keys)
        return keys

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "rows": self.rows,
            "fits": {key: fit.to_dict() for key, fit in self.fits.items()},
        }


def effective_constant(r) -> float:
    """Base ``C`` with ``C(m, r)`` of order ``C^m``: ``e^(1/r)`` for ``r <= 2``, ``sqrt(2)`` above."""
    r = parse_r(r)
    return math.exp(float(1 / r)) if r <= 2 else math.sqrt(2.0)


def kq_envelope(
    seq,
    xs: Sequence[float],
    r,
    y: Optional[float] = None,
    c: Optional[float] = None,
    variant: HVariant = HVariant.LOG,
) -> TrendProbe:
    """Master bound over ``xs`` split into its components, against ``t = sqrt(log x log log x)``.

    Per ``x``: ``log_ratio = log(bound / x^sigma)``, the prefix
    ``(l+1) log(1 + log x / log q_1)``, and the decay component
    ``sigma h(M)`` of the optimal degree, with ``h`` evaluated at its
    stationary point for the effective constant of ``C(m, r)``. The decay
    component is ``-2 sigma sqrt(log x (log y - log C))``; rows where
    ``log y <= log C`` leave it out.

    The fits hold the raw ``log_ratio`` slope next to the ``log_prefix`` and
    ``decay`` slopes, so a growing prefix shows in the output.
    """
    seq = weight_sequence(seq)
    r = parse_r(r)
    s = sigma(r)
    C = effective_constant(r)
    rows = []
    for x in xs:
        report = kq_master_bound(seq, x, y=y, r=r, c=c)
        used_y = report.inputs["y"]
        log_x = math.log(x)
        row = {
            "x": x,
            "y": used_y,
            "t": math.sqrt(log_x * math.log(log_x)),
            "log_value": report.intermediates["log_value"],
            "log_ratio": report.intermediates["log_ratio"],
            "log_prefix": report.intermediates["log_prefix"],
            "argmax_m": report.intermediates["argmax_m"],
        }
        try:
            M, h_max = h_maximizer(x, used_y, C, variant)
        except DomainError:
            pass
        else:
            row["M"] = M
            row["decay"] = s * h_max
        rows.append(row)
    probe = TrendProbe(
        "kq-envelope",
        {
            "weights": seq.label,
            "theta": seq.theta if isinstance(seq, KLogSequence) else 1.0,
            "r": r_label(r),
            "y": y,
            "variant": HVariant(variant).value,
            "C": C,
        },
        rows,
    )
    ts = [row["t"] for row in rows]
    if len(rows) >= 2:
        probe.fits["log_ratio"] = TrendFit.fit(ts, [row["log_ratio"] for row in rows])
        probe.fits["log_prefix"] = TrendFit.fit(ts, [row["log_prefix"] for row in rows])
        decayed = [row for row in rows if "decay" in row]
        if len(decayed) >= 2:
            probe.fits["decay"] = TrendFit.fit([row["t"] for row in decayed], [row["decay"] for row in decayed])
    return probe


def bohr_trend(ns: Sequence[int], r, m_max: Optional[int] = None) -> TrendProbe:
    """Exponent fit of the full-family Bohr lower bound against ``log n / n``.

    The slope of ``log K`` against ``log(log n / n)`` estimates the exponent
    ``sigma = 1 - 1/min(r, 2)``.
    """
    r = parse_r(r)
    s = sigma(r)
    rows = []
    for n in ns:
        if n < 2:
            raise DomainError(f"The Bohr trend needs n >= 2, got {n}")
        report = bohr_lower_bound(n, r, m_max=m_max)
        rows.append(
            {
                "n": n,
                "log_shape": math.log(math.log(n) / n),
                "value": report.value,
                "log_value": math.log(report.value),
                "argmax_m": report.intermediates["argmax_m"],
                "reduction_form": report.intermediates["reduction_form"],
            }
        )
    probe = TrendProbe("bohr-trend", {"r": r_label(r), "m_max": m_max}, rows)
    if len(rows) >= 2:
        probe.fits["exponent"] = TrendFit.fit(
            [row["log_shape"] for row in rows], [row["log_value"] for row in rows], target=s
        )
    return probe
