from enum import Enum

SCHEMA = "monomial-lab/1"
CONSTANTS_SCHEMA = "monomial-lab-constants/1"

DEFAULT_SEED = 0
DEFAULT_RESTARTS = 64
DEFAULT_ITERATIONS = 200

# Relative slack for comparisons of two floating evaluations of one identity
REL_TOL = 1e-12
KQ_SUM_RTOL = 1e-10


class WeightKind(str, Enum):
    PRIMES = "primes"
    KLOG = "klog"


class Family(str, Enum):
    JX = "jx"
    JXM = "jxm"
    JMINUS = "jminus"
    JPLUS = "jplus"


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    NOT_APPLICABLE = "not-applicable"


class BlockClosure(str, Enum):
    RIGHT = "right"
    LEFT = "left"


class HVariant(str, Enum):
    PRINTED = "printed"
    LOG = "log"


class Inequality(str, Enum):
    """Names carried by check reports and failure records."""

    CAUCHY = "cauchy-coefficient-estimate"
    CAUCHY_MULTIPLICITY = "cauchy-multiplicity-estimate"
    MIXED_R_LE_2 = "mixed-norm-prefix-estimate"
    MIXED_R_INF = "mixed-norm-column-estimate"
    MONOMIAL = "unconditional-monomial-estimate"
    REDUCED_INCLUSION = "reduced-set-inclusion"
    KQ_PARTITION = "kq-partition"
    JMINUS_SIZE = "jminus-size"
    JPLUS_SIZE = "jplus-size"
    LANDAU = "landau-size"
    EMPTY_DEGREE = "empty-degree"
