from monomial_lab.poly._ball import BallSpec, parse_r
from monomial_lab.poly._checks import (
    CheckRecord,
    CheckReport,
    cauchy_bound_check,
    kq_sum,
    kq_sum_report,
    mixed_norm_check,
    thm_monomial_check,
    weighted_sum,
)
from monomial_lab.poly._norm import (
    SupNormBudget,
    SupNormEstimate,
    certified_upper,
    monomial_sup_norm,
    sup_norm,
    torus_grid_upper,
)
from monomial_lab.poly._points import (
    ExplicitPoint,
    ModulusTable,
    PowerLogPoint,
    PrimeScaledPoint,
    SequencePoint,
    as_point,
    parse_point,
)
from monomial_lab.poly._polynomial import (
    SparsePolynomial,
    coefficient_lookup,
    evaluate,
    restrict_prefix,
    transfer_coefficients,
)
from monomial_lab.poly._probes import (
    BlockSums,
    BohrSetStatistic,
    SidonEstimate,
    block_partial_sums,
    bohr_set_statistic,
    ksz_probe,
    one_variable_powers,
    sidon_estimate,
    sidon_lower_bound,
)
from monomial_lab.poly._random import random_ball_point, random_index_subset, random_polynomial, random_sign_polynomial

__all__ = [
    "BallSpec",
    "BlockSums",
    "BohrSetStatistic",
    "CheckRecord",
    "CheckReport",
    "ExplicitPoint",
    "ModulusTable",
    "PowerLogPoint",
    "PrimeScaledPoint",
    "SequencePoint",
    "SidonEstimate",
    "SparsePolynomial",
    "SupNormBudget",
    "SupNormEstimate",
    "as_point",
    "block_partial_sums",
    "bohr_set_statistic",
    "cauchy_bound_check",
    "certified_upper",
    "coefficient_lookup",
    "evaluate",
    "kq_sum",
    "kq_sum_report",
    "ksz_probe",
    "mixed_norm_check",
    "monomial_sup_norm",
    "one_variable_powers",
    "parse_point",
    "parse_r",
    "random_ball_point",
    "random_index_subset",
    "random_polynomial",
    "random_sign_polynomial",
    "restrict_prefix",
    "sidon_estimate",
    "sidon_lower_bound",
    "sup_norm",
    "thm_monomial_check",
    "torus_grid_upper",
    "transfer_coefficients",
    "weighted_sum",
]
