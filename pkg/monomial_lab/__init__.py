from importlib.metadata import PackageNotFoundError, version

from monomial_lab._constants import SCHEMA, CheckStatus, Family, HVariant, Inequality, WeightKind
from monomial_lab._errors import (
    CapExceededError,
    DimensionError,
    DomainError,
    MembershipError,
    MixedLengthError,
    MonomialLabError,
    OrderViolationError,
    UnsupportedSequenceError,
    WeightOverflowError,
)
from monomial_lab._logging import disable_logging, enable_logging, set_verbosity
from monomial_lab._util import canonical_dumps, obj_canonicalized_hash
from monomial_lab.bounds import BoundReport, bohr_lower_bound, chi_upper, constant_cmr, kq_master_bound
from monomial_lab.index import EMPTY, MultiIndex, WeightedFamilySpec, census, enumerate_family, enumerate_jmn
from monomial_lab.poly import BallSpec, SparsePolynomial, SupNormBudget, evaluate, sup_norm
from monomial_lab.weights import weight_sequence

try:
    __version__ = version("monomial-lab")
except PackageNotFoundError:
    __version__ = "0.0.0+unknown"


def info() -> dict:
    """Versions of the package and its numerical stack."""
    import numpy
    import scipy

    from monomial_lab.extensions import shewchuk

    return {
        "monomial_lab": __version__,
        "numpy": numpy.__version__,
        "scipy": scipy.__version__,
        "compensated_sum": "shewchuk" if shewchuk.available else "math.fsum",
        "schema": SCHEMA,
    }


__all__ = [
    "EMPTY",
    "SCHEMA",
    "BallSpec",
    "BoundReport",
    "CapExceededError",
    "CheckStatus",
    "DimensionError",
    "DomainError",
    "Family",
    "HVariant",
    "Inequality",
    "MembershipError",
    "MixedLengthError",
    "MonomialLabError",
    "MultiIndex",
    "OrderViolationError",
    "SparsePolynomial",
    "SupNormBudget",
    "UnsupportedSequenceError",
    "WeightKind",
    "WeightOverflowError",
    "WeightedFamilySpec",
    "bohr_lower_bound",
    "canonical_dumps",
    "census",
    "chi_upper",
    "constant_cmr",
    "disable_logging",
    "enable_logging",
    "enumerate_family",
    "enumerate_jmn",
    "evaluate",
    "info",
    "kq_master_bound",
    "obj_canonicalized_hash",
    "set_verbosity",
    "sup_norm",
    "weight_sequence",
]
