import math
from dataclasses import dataclass

from monomial_lab._errors import DomainError
from monomial_lab._exponents import Exponent, conjugate, inverse, parse_r, r_label, sigma


@dataclass(frozen=True)
class BallSpec:
    """Closed unit ball of ``ℓ_r^n``.

    ``r`` is stored exactly (a ``Fraction``) or as ``math.inf``, so the
    conjugate exponent is computed without division by zero at ``r = 1``
    and ``r = inf``.
    """

    r: Exponent
    n: int

    def __post_init__(self):
        object.__setattr__(self, "r", parse_r(self.r))
        if int(self.n) < 1:
            raise DomainError(f"The dimension must be at least 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def is_infinite(self) -> bool:
        return self.r == math.inf

    @property
    def r_float(self) -> float:
        return math.inf if self.is_infinite else float(self.r)

    @property
    def inv_r(self) -> float:
        return inverse(self.r)

    @property
    def conjugate(self) -> float:
        """``r'`` with ``1/r + 1/r' = 1``."""
        return conjugate(self.r)

    @property
    def sigma(self) -> float:
        return sigma(self.r)

    @property
    def label(self) -> str:
        return r_label(self.r)

    def with_dimension(self, n: int) -> "BallSpec":
        return BallSpec(self.r, n)

    def to_dict(self) -> dict:
        return {"r": self.label, "n": self.n}
