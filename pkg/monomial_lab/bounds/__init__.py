from monomial_lab._exponents import sigma
from monomial_lab.bounds._formulas import (
    BOHR_CONSTANT,
    bohr_lower_bound,
    chi_upper,
    chi_upper_report,
    cmr_report,
    constant_cmr,
    h_grid_check,
    h_maximizer,
    h_value,
    holomorphic_thresholds,
    kq_master_bound,
    log_constant_cmr,
    mon_polynomial_exponents,
    polynomial_bound,
    polynomial_bound_report,
    recommended_y,
    recommended_y_report,
    sigma_m,
)
from monomial_lab.bounds._registry import BOUNDS, bound_names, build_report, sweep
from monomial_lab.bounds._report import BoundReport
from monomial_lab.bounds._trends import TrendFit, TrendProbe, bohr_trend, effective_constant, kq_envelope

__all__ = [
    "BOHR_CONSTANT",
    "BOUNDS",
    "BoundReport",
    "TrendFit",
    "TrendProbe",
    "bohr_lower_bound",
    "bohr_trend",
    "bound_names",
    "build_report",
    "chi_upper",
    "chi_upper_report",
    "cmr_report",
    "constant_cmr",
    "effective_constant",
    "h_grid_check",
    "h_maximizer",
    "h_value",
    "holomorphic_thresholds",
    "kq_envelope",
    "kq_master_bound",
    "log_constant_cmr",
    "mon_polynomial_exponents",
    "polynomial_bound",
    "polynomial_bound_report",
    "recommended_y",
    "recommended_y_report",
    "sigma",
    "sigma_m",
    "sweep",
]
