"""Bound names accepted by ``monomial-lab bound`` and the report builders behind them."""

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from monomial_lab._exponents import parse_r, r_label
from monomial_lab.bounds._formulas import (
    bohr_lower_bound,
    chi_upper_report,
    cmr_report,
    h_grid_check,
    h_maximizer,
    holomorphic_thresholds,
    kq_master_bound,
    mon_polynomial_exponents,
    polynomial_bound_report,
    recommended_y_report,
    sigma_m,
)
from monomial_lab.bounds._report import BoundReport


def _sigma_m_report(m, r) -> BoundReport:
    return BoundReport("sigma-m", {"m": m, "r": r_label(parse_r(r))}, sigma_m(m, r))


def _h_report(x, y, C, variant="printed") -> BoundReport:
    M, h_max = h_maximizer(x, y, C, variant)
    check = h_grid_check(x, y, C, variant)
    return BoundReport(
        "h",
        {"x": x, "y": y, "C": C, "variant": variant},
        h_max,
        {"M": M, "grid_max": check["grid_max"], "grid_argmax": check["grid_argmax"], "maximal": check["maximal"]},
    )


def _kq_master_report(weights, x, r, y=None, c=None, constant="cmr") -> BoundReport:
    return kq_master_bound(weights, x, y=y, r=r, c=c, constant=constant)


def _bohr_report(n, r, m_max=None) -> BoundReport:
    return bohr_lower_bound(n, r, m_max=m_max)


@dataclass(frozen=True)
class BoundEntry:
    builder: Callable[..., BoundReport]
    required: Tuple[str, ...]
    optional: Tuple[str, ...] = ()


BOUNDS: Dict[str, BoundEntry] = {
    "cmr": BoundEntry(cmr_report, ("m", "r")),
    "chi": BoundEntry(chi_upper_report, ("m", "r", "j_star_size")),
    "sigma-m": BoundEntry(_sigma_m_report, ("m", "r")),
    "y": BoundEntry(recommended_y_report, ("x", "theta")),
    "h": BoundEntry(_h_report, ("x", "y", "C"), ("variant",)),
    "polynomial": BoundEntry(polynomial_bound_report, ("m", "r", "x")),
    "kq-master": BoundEntry(_kq_master_report, ("weights", "x", "r"), ("y", "c", "constant")),
    "bohr": BoundEntry(_bohr_report, ("n", "r"), ("m_max",)),
    "mon-polynomial": BoundEntry(mon_polynomial_exponents, ("m", "r")),
    "holomorphic": BoundEntry(holomorphic_thresholds, ("r",)),
}


def bound_names() -> List[str]:
    return sorted(BOUNDS)


def build_report(name: str, params: Mapping[str, Any]) -> BoundReport:
    """Evaluate bound ``name`` with the parameters it needs.

    Parameters set to ``None`` count as missing; unused parameters are ignored.

    Raises:
        ValueError: for unknown names or missing required parameters. The
            message names the flag (``--m``, ``--j-star-size``, ...).
    """
    entry = BOUNDS.get(name)
    if entry is None:
        raise ValueError(f"Unknown bound {name!r}; available: {', '.join(bound_names())}")
    missing = [key for key in entry.required if params.get(key) is None]
    if missing:
        flags = ", ".join("--" + key.replace("_", "-") for key in missing)
        raise ValueError(f"Bound {name!r} needs {flags}")
    kwargs = {key: params[key] for key in entry.required}
    kwargs.update({key: params[key] for key in entry.optional if params.get(key) is not None})
    return entry.builder(**kwargs)


def sweep(name: str, fixed: Mapping[str, Any], grid: Mapping[str, Sequence[Any]]) -> Iterable[BoundReport]:
    """Reports over the Cartesian product of ``grid``, keys in sorted order."""
    keys = sorted(grid)
    for values in itertools.product(*(grid[key] for key in keys)):
        params = dict(fixed)
        params.update(zip(keys, values))
        yield build_report(name, params)
