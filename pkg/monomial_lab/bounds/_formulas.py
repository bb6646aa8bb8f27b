"""Closed-form bounds for unconditional constants of monomial bases.

Every function evaluates the fully explicit, pre-asymptotic expression; no
``o(1)`` term is ever synthesized. Functions named ``*_report`` wrap the
value in a :class:`BoundReport` exposing the intermediate terms.

Where two case formulas both apply at ``r = 2``, the ``r <= 2`` branch is
used and the report notes the other one.
"""

import math
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np
from scipy.special import gammaln

from monomial_lab._constants import HVariant
from monomial_lab._errors import DomainError
from monomial_lab._exponents import conjugate, inverse, parse_r, r_label, sigma
from monomial_lab._settings import LOGGER
from monomial_lab.bounds._report import BoundReport
from monomial_lab.index import jplus_growth
from monomial_lab.weights import KLogSequence, weight_sequence

# y is kept strictly above 2 when the recommended value falls below
Y_FLOOR = 2.0 + 1e-9
BOHR_CONSTANT = 1.0 / (3.0 * math.e**2)
GEOMETRIC_CONSTANT = math.e**2
_LOG_MAX = math.log(np.finfo(float).max)


def _check_m(m: int, minimum: int = 1) -> int:
    if int(m) != m or m < minimum:
        raise DomainError(f"m must be an integer >= {minimum}, got {m}")
    return int(m)


def _safe_exp(log_value: float) -> float:
    return math.exp(log_value) if log_value < _LOG_MAX else math.inf


def log_constant_cmr(m: int, r) -> float:
    """Natural log of ``C(m, r)``, finite for every degree."""
    m = _check_m(m)
    r = parse_r(r)
    if r <= 2:
        return 1.0 + math.log(m) + (m - 1) * inverse(r)
    return 1.0 + math.log(m) + (m - 1) / 2 * math.log(2.0)


def constant_cmr(m: int, r) -> float:
    """``C(m, r)``: ``e m e^((m-1)/r)`` for ``r <= 2`` and ``e m 2^((m-1)/2)`` for ``r > 2``.

    Returns ``inf`` past the float range; use :func:`log_constant_cmr` there.

    Examples:
        >>> round(constant_cmr(2, 2), 4)
        8.9634
    """
    return _safe_exp(log_constant_cmr(m, r))


def cmr_report(m: int, r) -> BoundReport:
    r = parse_r(r)
    report = BoundReport(
        "cmr",
        {"m": m, "r": r_label(r)},
        constant_cmr(m, r),
        {"branch": "r<=2" if r <= 2 else "r>2"},
    )
    if r == 2:
        report.intermediates["alternative"] = _safe_exp(1.0 + math.log(m) + (m - 1) / 2 * math.log(2.0))
        report.notes.append("both case formulas apply at r = 2; the r <= 2 branch is used")
    return report


def sigma_m(m: int, r) -> float:
    """``(m-1)/m (1 - 1/r)``."""
    m = _check_m(m)
    return (m - 1) / m * (1.0 - inverse(parse_r(r)))


def chi_upper(m: int, r, j_star_size: int) -> float:
    """``C(m, r) |J*|^(1 - 1/min(r, 2))``, an upper bound of the unconditional constant."""
    if j_star_size < 1:
        raise DomainError(f"The reduced set size must be at least 1, got {j_star_size}")
    return constant_cmr(m, r) * float(j_star_size) ** sigma(r)


def chi_upper_report(m: int, r, j_star_size: int) -> BoundReport:
    r = parse_r(r)
    return BoundReport(
        "chi-upper",
        {"m": m, "r": r_label(r), "j_star_size": j_star_size},
        chi_upper(m, r, j_star_size),
        {"cmr": constant_cmr(m, r), "sigma": sigma(r)},
    )


def _recommended_y(x: float, theta: float) -> Tuple[float, float, bool]:
    if not x > math.e**math.e:
        raise DomainError(f"The recommended y needs x > e^e, got {x}")
    if not 0.5 < theta <= 1:
        raise DomainError(f"The recommended y needs 1/2 < theta <= 1, got {theta}")
    log_x = math.log(x)
    raw = log_x ** (theta - 0.5) / math.log(log_x)
    value = min(max(raw, Y_FLOOR), x * (1 - 1e-12))
    clamped = value != raw
    if clamped:
        LOGGER.warning(f"Recommended y = {raw:.6g} for x = {x:.6g}, theta = {theta} clamped to {value:.12g}")
    return value, raw, clamped


def recommended_y(x: float, theta: float) -> float:
    """``(log x)^(theta - 1/2) / log log x`` clamped to ``(2, x)``.

    Raises:
        DomainError: unless ``x > e^e`` and ``1/2 < theta <= 1``.
    """
    return _recommended_y(x, theta)[0]


def recommended_y_report(x: float, theta: float) -> BoundReport:
    value, raw, clamped = _recommended_y(x, theta)
    report = BoundReport("recommended-y", {"x": x, "theta": theta}, value, {"raw": raw})
    if clamped:
        report.flags.append("y-clamped")
    return report


def h_value(m: float, x: float, y: float, C: float) -> float:
    """``m log C - (log x)/m - m log y``."""
    return m * math.log(C) - math.log(x) / m - m * math.log(y)


def h_maximizer(x: float, y: float, C: float, variant: HVariant = HVariant.PRINTED) -> Tuple[float, float]:
    """Stationary point ``M`` of ``h(m) = m log C - (log x)/m - m log y`` and ``h(M)``.

    ``variant="printed"`` uses ``M = sqrt(log x / (log y - C))``;
    ``variant="log"`` uses ``M = sqrt(log x / (log y - log C))``, the root
    of ``h'``, which makes ``h(M)`` the maximum over ``m > 0``.

    Raises:
        DomainError: if ``x <= 1``, ``C <= 0`` or the denominator is not positive.
    """
    variant = HVariant(variant)
    if not x > 1:
        raise DomainError(f"h_maximizer needs x > 1, got {x}")
    if not C > 0:
        raise DomainError(f"h_maximizer needs C > 0, got {C}")
    if not y > 0:
        raise DomainError(f"h_maximizer needs y > 0, got {y}")
    shift = C if variant is HVariant.PRINTED else math.log(C)
    denominator = math.log(y) - shift
    if not denominator > 0:
        raise DomainError(f"Need log y > {'C' if variant is HVariant.PRINTED else 'log C'}, got log y = {math.log(y)}")
    M = math.sqrt(math.log(x) / denominator)
    return M, h_value(M, x, y, C)


def h_grid_check(
    x: float, y: float, C: float, variant: HVariant = HVariant.PRINTED, m_max: Optional[int] = None, tol: float = 1e-12
) -> Dict[str, Any]:
    """Compare ``h(M)`` with ``max h(m)`` over integers ``1 <= m <= m_max``."""
    M, h_max = h_maximizer(x, y, C, variant)
    m_max = max(int(math.ceil(2 * M)), 1) if m_max is None else m_max
    grid = [h_value(m, x, y, C) for m in range(1, m_max + 1)]
    best = max(grid)
    return {
        "M": M,
        "h_max": h_max,
        "grid_max": best,
        "grid_argmax": grid.index(best) + 1,
        "maximal": h_max >= best - tol * max(1.0, abs(best)),
    }


def polynomial_bound(m: int, r, x: float) -> float:
    """x-dependence of the unconditional constant of degree-``m`` Dirichlet-type polynomials up to ``x``.

    ``x^((m-1)/m s) (log log x)^((m-1) s) / (log x)^s`` with ``s = 1 - 1/r``
    for ``r <= 2``, and ``x^((m-1)/(2m)) / (log x)^((m-1)/2)`` for ``r > 2``.
    The multiplicative constant is only known to exist and is taken as 1.
    """
    m = _check_m(m)
    r = parse_r(r)
    if not x >= 3:
        raise DomainError(f"polynomial_bound needs x >= 3, got {x}")
    log_x = math.log(x)
    if r <= 2:
        s = 1.0 - inverse(r)
        log_value = (m - 1) / m * s * log_x + (m - 1) * s * math.log(math.log(x)) - s * math.log(log_x)
    else:
        log_value = (m - 1) / (2 * m) * log_x - (m - 1) / 2 * math.log(log_x)
    return _safe_exp(log_value)


def polynomial_bound_report(m: int, r, x: float) -> BoundReport:
    r = parse_r(r)
    report = BoundReport(
        "polynomial",
        {"m": m, "r": r_label(r), "x": x},
        polynomial_bound(m, r, x),
        {"branch": "r<=2" if r <= 2 else "r>2", "constant": 1.0},
        flags=["unnormalized"],
    )
    if r == 2:
        report.intermediates["alternative"] = polynomial_bound(m, math.inf, x)
        report.notes.append("both case formulas apply at r = 2; the r <= 2 branch is used")
    return report


def kq_master_bound(
    seq,
    x: float,
    y: Optional[float] = None,
    r=2,
    c: Optional[float] = None,
    constant: str = "cmr",
) -> BoundReport:
    """Explicit bound of ``sum_{q_k <= x} |c_k u_k|`` for ``||f||_inf <= 1`` on ``B(ℓ_r)``.

    The bound is
    ``(1 + log x / log q_1)^(l+1) * max_m K_m |J+(x^((m-1)/m), m-1; y)|^sigma``
    with the J+ size bound substituted, where ``K_m = C(m, r)``
    (``constant="cmr"``) or ``e^(2m)`` (``constant="geometric"``) and ``m``
    runs over ``1 .. min(log x / log q_1, log x / log q_(l+1))``. Terms are
    combined in log space.

    Args:
        seq: Weight sequence or its label.
        x: Weight budget.
        y: Cutoff; the recommended ``y`` for ``theta`` (1 for primes) when omitted.
        r: Exponent of the ball.
        c: Constant of the J+ growth term; defaults to ``1/q_1+1/q_2+1/q_3``
            for ``klog`` and to the calibrated value for primes.
        constant: ``"cmr"`` or ``"geometric"``.

    Raises:
        DomainError: for ``theta <= 1/2`` or unless ``2 < y < x``.
    """
    seq = weight_sequence(seq)
    r = parse_r(r)
    theta = seq.theta if isinstance(seq, KLogSequence) else 1.0
    if theta <= 0.5:
        raise DomainError(f"The master bound needs theta > 1/2, got {theta}")
    if constant not in ("cmr", "geometric"):
        raise ValueError(f"Unknown constant {constant!r}, expected 'cmr' or 'geometric'")
    flags = []
    if y is None:
        y, _, clamped = _recommended_y(x, theta)
        if clamped:
            flags.append("y-clamped")
    if not 2 < y < x:
        raise DomainError(f"Expected 2 < y < x, got y={y}, x={x}")

    s = sigma(r)
    log_x = math.log(x)
    l = seq.cutoff_rank(y)  # noqa: E741
    q1 = float(seq.term(1))
    q_next = float(seq.term(l + 1))
    m_max = max(1, min(int(math.floor(log_x / math.log(q1))), int(math.floor(log_x / math.log(q_next)))))
    growth, used_c = jplus_growth(seq, x, c)
    if seq.exact and c is None:
        flags.append("empirical-constant")

    log_prefix = (l + 1) * math.log1p(log_x / math.log(q1))
    per_m = []
    for m in range(1, m_max + 1):
        if m == 1:
            log_size = 0.0
        else:
            log_size = (m - 1) / m * log_x - (m - 1) * math.log(y) + y * growth
        log_constant = 2.0 * m if constant == "geometric" else log_constant_cmr(m, r)
        per_m.append({"m": m, "log_size": log_size, "log_term": log_constant + s * log_size})
    best = max(per_m, key=lambda item: item["log_term"])
    log_value = log_prefix + best["log_term"]

    return BoundReport(
        "kq-master",
        {"weights": seq.label, "x": x, "y": y, "r": r_label(r), "c": used_c, "constant": constant},
        _safe_exp(log_value),
        {
            "theta": theta,
            "sigma": s,
            "l": l,
            "q1": q1,
            "q_l_plus_1": q_next,
            "m_max": m_max,
            "growth": growth,
            "log_prefix": log_prefix,
            "per_m": per_m,
            "argmax_m": best["m"],
            "log_value": log_value,
            "log_ratio": log_value - s * log_x,
        },
        flags=flags,
    )


def _full_family_log_sizes(n: int, ms: np.ndarray) -> np.ndarray:
    # log |J(m-1, n)| = log binom(n + m - 2, m - 1)
    return gammaln(n + ms - 1) - gammaln(ms) - gammaln(n)


def bohr_lower_bound(n: int, r, sizes: Optional[Mapping[int, int]] = None, m_max: Optional[int] = None) -> BoundReport:
    """Lower bound ``1/(3e^2) / sup_m |J_m*|^(sigma/m)`` of the Bohr radius of ``B(ℓ_r^n)``.

    Args:
        n: Dimension.
        r: Exponent.
        sizes: Reduced-set sizes ``|J_m*|`` per degree ``m``. Without it the
            full family ``J(m, n)`` is used, ``|J(m, n)*| = |J(m-1, n)|``, for
            ``m = 1 .. m_max`` (default ``2n``).
        m_max: Last degree of the full family.

    The report also holds the per-degree radii ``chi_upper^(-1/m)``, their
    reduction form ``(1/3) min_m chi_upper^(-1/m)`` and, for the full family,
    the reference shape ``(log n / n)^sigma``.
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    r = parse_r(r)
    s = sigma(r)
    if sizes is None:
        m_max = 2 * n if m_max is None else m_max
        ms = np.arange(1, m_max + 1, dtype=np.float64)
        log_sizes = _full_family_log_sizes(n, ms)
        family = "full"
    else:
        if any(size < 1 for size in sizes.values()):
            raise DomainError("Reduced-set sizes must be at least 1")
        ms = np.array(sorted(sizes), dtype=np.float64)
        log_sizes = np.array([math.log(sizes[int(m)]) for m in ms])
        family = "given"
    exponents = s * log_sizes / ms
    k = int(np.argmax(exponents))
    value = BOHR_CONSTANT * math.exp(-float(exponents[k]))

    log_cmr = np.array([log_constant_cmr(int(m), r) for m in ms])
    radii = np.exp(-(log_cmr + s * log_sizes) / ms)
    intermediates = {
        "sigma": s,
        "family": family,
        "argmax_m": int(ms[k]),
        "sup_exponent": float(exponents[k]),
        "reduction_form": float(radii.min()) / 3.0,
        "reduction_argmin_m": int(ms[int(np.argmin(radii))]),
    }
    if len(ms) <= 64:
        intermediates["per_m"] = [
            {"m": int(m), "log_size": float(ls), "radius": float(rad)} for m, ls, rad in zip(ms, log_sizes, radii)
        ]
    if family == "full" and n > 1:
        intermediates["reference"] = (math.log(n) / n) ** s
        if r == math.inf:
            intermediates["reference_sqrt"] = math.sqrt(math.log(n) / n)
    return BoundReport("bohr", {"n": n, "r": r_label(r), "m_max": m_max}, value, intermediates)


def mon_polynomial_exponents(m: int, r) -> BoundReport:
    """Lorentz sequence spaces bracketing the monomial convergence set of ``P(^m ℓ_r)``.

    The report value is the first index ``p`` of the outer space
    ``ℓ_(p, inf)``; ``inner`` and ``outer`` list ``(p, q)`` pairs, and
    ``exact`` says whether both sides coincide.
    """
    m = _check_m(m)
    r = parse_r(r)
    notes = []
    if m == 1:
        p = math.inf if r == math.inf else float(r)
        inner = [[p, p]]
        outer = [p, p]
        exact = True
        regime = "linear"
    elif r == math.inf:
        p = 2 * m / (m - 1)
        inner, outer, exact, regime = [[p, math.inf]], [p, math.inf], True, "r=inf"
    elif r == 1:
        inner, outer, exact, regime = [[1.0, 1.0]], [1.0, 1.0], True, "r=1"
    elif r >= 2:
        p = 1.0 / ((m - 1) / (2 * m) + inverse(r))
        inner = [[2 * m / (m - 1), math.inf], [float(r), float(r)]]
        outer = [p, math.inf]
        exact, regime = False, "2<=r<inf"
        notes.append("inner set is the pointwise product of the listed spaces")
    else:
        mr = m * conjugate(r)
        p = mr / (mr - 1)
        inner = [[p, p]]
        outer = [p, math.inf]
        exact, regime = False, "1<r<2"
        notes.append("inner inclusion holds for ℓ_(p-eps) with every eps > 0, not for eps = 0")
    return BoundReport(
        "mon-polynomial",
        {"m": m, "r": r_label(r)},
        outer[0],
        {"regime": regime, "inner": inner, "outer": outer, "exact": exact},
        notes=notes,
    )


def holomorphic_thresholds(r) -> BoundReport:
    """Thresholds for ``(n^(-(1/r + sigma)) (log(n+2))^(-beta))_n`` to lie in ``mon H_inf(B(ℓ_r))``.

    The value is the sufficient threshold: every ``beta`` above it works;
    ``beta >= 1/r`` is necessary. Also reports the ``theta`` threshold of
    the ball family ``(n^sigma (log(n+2))^(theta sigma))^-1 B(ℓ_r)`` and,
    for ``1 < r < inf``, the exponent ``s`` with ``1/s = 1/2 + 1/max(r, 2)``
    for which ``B(ℓ_r) ∩ ℓ_s`` is strictly smaller than the set.
    """
    r = parse_r(r)
    s = sigma(r)
    inv = inverse(r)
    notes = []
    if r <= 2:
        sufficient = inv / 2 + 0.5
        theta_threshold = 0.5
    else:
        sufficient = inv
        theta_threshold = 0.0
    if r == 2:
        notes.append("both case formulas apply at r = 2; the r <= 2 branch is used, the other gives 1/r")
    intermediates = {
        "sigma": s,
        "alpha": inv + s,
        "necessary_beta": inv,
        "theta_threshold": theta_threshold,
        "strict": True,
        "exact": r == 1,
    }
    if 1 < r < math.inf:
        intermediates["lorentz_s"] = 1.0 / (0.5 + 1.0 / max(float(r), 2.0))
    return BoundReport("holomorphic", {"r": r_label(r)}, sufficient, intermediates, notes=notes)
