"""Certified sandwich ``lower <= ||P||_inf <= upper`` on the unit ball of ``ℓ_r^n``.

The upper end is ``sum_j |c_j| sup |z^alpha(j)|`` with the exact monomial
norm ``(alpha^alpha / m^m)^(1/r)``. The lower end is the best value of
``|P(z)|`` found at admissible points: the maximizer of every monomial (with
and without phase alignment) and multi-start projected gradient ascent on
``|P|^2`` in polar coordinates ``z_i = rho_i e^(i phi_i)``.

On ``ℓ_inf`` the sup is attained on the torus, so only phases move.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from monomial_lab._constants import DEFAULT_ITERATIONS, DEFAULT_RESTARTS, DEFAULT_SEED, REL_TOL
from monomial_lab._errors import DimensionError
from monomial_lab._settings import LOGGER
from monomial_lab._util import compensated_sum, ordered_map
from monomial_lab.poly._ball import BallSpec
from monomial_lab.poly._polynomial import SparsePolynomial, evaluate

# Number of best deterministic seeds refined by gradient ascent
_REFINED_SEEDS = 4
_MIN_STEP = 1e-12


def monomial_sup_norm(spec: BallSpec, alpha: Sequence[int]) -> float:
    """``sup |z^alpha|`` over the unit ball of ``ℓ_r^n``, i.e. ``(alpha^alpha / m^m)^(1/r)``.

    ``0^0 = 1``; the value is 1 for ``r = inf`` and for the constant monomial.

    Examples:
        >>> monomial_sup_norm(BallSpec(1, 2), (1, 1))
        0.25
    """
    alpha = [int(a) for a in alpha]
    while alpha and alpha[-1] == 0:
        alpha.pop()
    if len(alpha) > spec.n:
        raise DimensionError(f"Exponent vector uses {len(alpha)} variables, ball has dimension {spec.n}")
    m = sum(alpha)
    if spec.is_infinite or m == 0:
        return 1.0
    log_value = math.fsum(a * math.log(a) for a in alpha if a > 0) - m * math.log(m)
    return math.exp(log_value * spec.inv_r)


def certified_upper(P: SparsePolynomial, spec: BallSpec) -> float:
    """``sum_j |c_j| monomial_sup_norm(alpha(j))``, an upper bound for ``||P||_inf``."""
    return compensated_sum(abs(c) * monomial_sup_norm(spec, j_exponent) for j_exponent, c in _exponents(P))


def _exponents(P: SparsePolynomial):
    for j, c in P.items():
        yield P.exponent(j), c


@dataclass(frozen=True)
class SupNormBudget:
    """Search budget of the lower estimate.

    Attributes:
        restarts: Random starting points refined by gradient ascent.
        iterations: Ascent steps per starting point.
        seed: Master seed; restart ``k`` draws from ``default_rng([seed, k])``.
        torus_grid: On ``ℓ_inf``, also sample ``P`` on an FFT torus grid, which
            gives a second certified upper bound and more witnesses.
    """

    restarts: int = DEFAULT_RESTARTS
    iterations: int = DEFAULT_ITERATIONS
    seed: int = DEFAULT_SEED
    torus_grid: bool = False

    def to_dict(self) -> dict:
        return {
            "restarts": self.restarts,
            "iterations": self.iterations,
            "seed": self.seed,
            "torus_grid": self.torus_grid,
        }


@dataclass
class SupNormEstimate:
    """Bracket of ``||P||_inf`` with a witness point for the lower end."""

    lower: float
    upper: float
    witness: np.ndarray
    coefficient_upper: float
    grid_upper: Optional[float] = None
    starts: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "coefficient_upper": self.coefficient_upper,
            "grid_upper": self.grid_upper,
            "witness": [complex(z) for z in self.witness],
            "starts": self.starts,
            "notes": list(self.notes),
        }


class _Landscape:
    """``|P|^2`` and its gradient in polar coordinates for one polynomial."""

    def __init__(self, P: SparsePolynomial, spec: BallSpec):
        self.spec = spec
        self.n = spec.n
        self.exponents = P.exponent_matrix(spec.n)
        self.coeffs = P.coefficient_array()
        self.degrees = self.exponents.sum(axis=1)
        self.max_power = int(self.exponents.max(initial=0))
        self.columns = np.arange(self.n)
        supports = self.exponents > 0
        self.disjoint = bool(np.all(supports.sum(axis=0) <= 1))

    def point(self, rho: np.ndarray, phi: np.ndarray) -> np.ndarray:
        return rho * np.exp(1j * phi)

    def _powers(self, z: np.ndarray) -> np.ndarray:
        table = np.ones((self.max_power + 1, self.n), dtype=np.complex128)
        for d in range(1, self.max_power + 1):
            table[d] = table[d - 1] * z
        return table

    def value(self, z: np.ndarray) -> complex:
        table = self._powers(z)
        monomials = np.prod(table[self.exponents, self.columns], axis=1)
        return complex(np.dot(self.coeffs, monomials))

    def gradient(self, rho: np.ndarray, phi: np.ndarray) -> Tuple[float, np.ndarray, np.ndarray]:
        """``|P|^2`` with its partial derivatives in ``rho`` and ``phi``."""
        z = self.point(rho, phi)
        table = self._powers(z)
        factors = table[self.exponents, self.columns]
        value = complex(np.dot(self.coeffs, np.prod(factors, axis=1)))
        dz = np.zeros(self.n, dtype=np.complex128)
        for i in range(self.n):
            alpha_i = self.exponents[:, i]
            active = alpha_i > 0
            if not np.any(active):
                continue
            others = np.prod(np.delete(factors[active], i, axis=1), axis=1)
            lowered = table[alpha_i[active] - 1, i]
            dz[i] = np.sum(self.coeffs[active] * alpha_i[active] * lowered * others)
        conj = np.conj(value)
        grad_rho = 2.0 * np.real(conj * dz * np.exp(1j * phi))
        grad_phi = -2.0 * np.imag(conj * dz * z)
        return abs(value) ** 2, grad_rho, grad_phi

    def project(self, rho: np.ndarray) -> np.ndarray:
        if self.spec.is_infinite:
            return np.ones(self.n)
        rho = np.clip(rho, 0.0, None)
        norm = np.sum(rho**self.spec.r_float) ** self.spec.inv_r
        if norm == 0:
            return np.full(self.n, self.n ** (-self.spec.inv_r))
        return rho / norm if norm > 1 else rho

    def aligned_phases(self, rho: np.ndarray) -> np.ndarray:
        """Phases making every term ``c_t z^alpha_t`` real and positive (disjoint supports only)."""
        phi = np.zeros(self.n)
        for alpha, c in zip(self.exponents, self.coeffs):
            support = alpha > 0
            phi[support] = -np.angle(c) / alpha.sum()
        return phi

    def term_maximizer(self, t: int) -> np.ndarray:
        alpha = self.exponents[t]
        if self.spec.is_infinite:
            return np.ones(self.n)
        m = alpha.sum()
        if m == 0:
            return np.full(self.n, self.n ** (-self.spec.inv_r))
        return (alpha / m) ** self.spec.inv_r

    def seeds(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        zero = np.zeros(self.n)
        uniform = np.ones(self.n) if self.spec.is_infinite else np.full(self.n, self.n ** (-self.spec.inv_r))
        starts = [(uniform, zero)]
        for t, (alpha, c) in enumerate(zip(self.exponents, self.coeffs)):
            rho = self.term_maximizer(t)
            phi = np.zeros(self.n)
            m = alpha.sum()
            if m > 0:
                phi[alpha > 0] = -np.angle(c) / m
            starts.append((rho, zero))
            starts.append((rho, phi))
        return starts

    def random_start(self, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        phi = rng.uniform(0.0, 2.0 * np.pi, self.n)
        if self.spec.is_infinite:
            return np.ones(self.n), phi
        rho = np.abs(rng.standard_normal(self.n))
        norm = np.sum(rho**self.spec.r_float) ** self.spec.inv_r
        return rho / norm, phi

    def ascend(self, rho: np.ndarray, phi: np.ndarray, iterations: int) -> Tuple[float, np.ndarray]:
        """Projected gradient ascent on ``|P|^2`` with an adaptive step."""
        rho = self.project(rho)
        if self.disjoint:
            phi = self.aligned_phases(rho)
        best, grad_rho, grad_phi = self.gradient(rho, phi)
        step = 0.25
        for _ in range(iterations):
            if self.spec.is_infinite:
                grad_rho = np.zeros(self.n)
            if self.disjoint:
                grad_phi = np.zeros(self.n)
            norm = math.sqrt(float(np.dot(grad_rho, grad_rho) + np.dot(grad_phi, grad_phi)))
            if norm == 0 or step < _MIN_STEP:
                break
            trial_rho = self.project(rho + step * grad_rho / norm)
            trial_phi = self.aligned_phases(trial_rho) if self.disjoint else phi + step * grad_phi / norm
            value, trial_grad_rho, trial_grad_phi = self.gradient(trial_rho, trial_phi)
            if value > best:
                rho, phi, best = trial_rho, trial_phi, value
                grad_rho, grad_phi = trial_grad_rho, trial_grad_phi
                step *= 1.5
            else:
                step *= 0.5
        return math.sqrt(best), self.point(rho, phi)


def torus_grid_upper(P: SparsePolynomial, max_points: int = 2**20) -> Optional[Tuple[float, float, np.ndarray]]:
    """Certified bound for ``||P||_inf`` on the torus from an FFT grid.

    Samples ``P`` on ``N^n`` equispaced points. Between grid points ``P``
    moves by at most ``delta ||P||`` with ``delta = pi D / N`` (``D`` the
    total degree, Bernstein's inequality along segments), so
    ``||P||_inf <= max_grid / (1 - delta)``.

    Returns:
        ``(bound, grid_max, witness)`` or ``None`` when no grid within
        ``max_points`` keeps ``delta < 1/2``.
    """
    n = max(P.n_vars, 1)
    if len(P) == 0:
        return 0.0, 0.0, np.ones(n, dtype=np.complex128)
    degree = max(P.max_degree, 1)
    exponents = P.exponent_matrix(n)
    target = 1 << int(math.ceil(math.log2(64 * degree)))
    cap = int(math.floor(max_points ** (1.0 / n) + 1e-9))
    size = min(target, cap)
    delta = math.pi * degree / size if size > 0 else math.inf
    if delta >= 0.5:
        return None
    grid = np.zeros((size,) * n, dtype=np.complex128)
    np.add.at(grid, tuple(exponents.T), P.coefficient_array())
    values = np.fft.ifftn(grid) * size**n
    flat = int(np.argmax(np.abs(values)))
    grid_max = float(np.abs(values).flat[flat])
    position = np.array(np.unravel_index(flat, values.shape), dtype=np.float64)
    witness = np.exp(2j * np.pi * position / size)
    return grid_max / (1.0 - delta), grid_max, witness


def sup_norm(
    P: SparsePolynomial,
    spec: BallSpec,
    budget: Optional[SupNormBudget] = None,
    threads: Optional[int] = None,
) -> SupNormEstimate:
    """Bracket ``||P||_inf`` over the unit ball of ``ℓ_r^n``.

    The result is the same for every thread count: restart ``k`` uses its own
    generator seeded with ``[budget.seed, k]`` and ties keep the first start.

    Raises:
        DimensionError: if ``P`` uses more than ``spec.n`` variables.
    """
    budget = SupNormBudget() if budget is None else budget
    if P.n_vars > spec.n:
        raise DimensionError(f"Polynomial uses {P.n_vars} variables, ball has dimension {spec.n}")
    coefficient_upper = certified_upper(P, spec)
    if len(P) == 0:
        return SupNormEstimate(0.0, 0.0, np.zeros(spec.n, dtype=np.complex128), 0.0)

    landscape = _Landscape(P, spec)
    scored = []
    for rho, phi in landscape.seeds():
        rho = landscape.project(rho)
        z = landscape.point(rho, phi)
        scored.append((abs(landscape.value(z)), rho, phi))
    order = sorted(range(len(scored)), key=lambda k: -scored[k][0])
    starts = [scored[k][1:] for k in order[:_REFINED_SEEDS]]

    def run(k: int) -> Tuple[float, np.ndarray]:
        if k < len(starts):
            rho, phi = starts[k]
        else:
            rho, phi = landscape.random_start(np.random.default_rng([budget.seed, k - len(starts)]))
        return landscape.ascend(rho, phi, budget.iterations)

    results = ordered_map(run, range(len(starts) + max(budget.restarts, 0)), threads)
    best_seed = order[0]
    witness = landscape.point(scored[best_seed][1], scored[best_seed][2])
    lower = abs(evaluate(P, witness))
    for _, z in results:
        value = abs(evaluate(P, z))
        if value > lower:
            lower, witness = value, z

    estimate = SupNormEstimate(lower, coefficient_upper, witness, coefficient_upper, starts=len(results))
    if budget.torus_grid and spec.is_infinite:
        grid = torus_grid_upper(P)
        if grid is None:
            estimate.notes.append("torus grid skipped: too many variables for the point budget")
        else:
            bound, _, grid_witness = grid
            estimate.grid_upper = bound
            estimate.upper = min(estimate.upper, bound)
            padded = np.ones(spec.n, dtype=np.complex128)
            padded[: len(grid_witness)] = grid_witness
            value = abs(evaluate(P, padded))
            if value > estimate.lower:
                estimate.lower, estimate.witness = value, padded

    if estimate.lower > estimate.upper:
        if estimate.lower <= estimate.upper * (1 + REL_TOL):
            estimate.lower = estimate.upper
        else:
            raise ArithmeticError(f"Sup-norm bracket inverted: lower={estimate.lower!r} > upper={estimate.upper!r}")
    LOGGER.debug(
        f"sup_norm over B(ℓ_{spec.label}^{spec.n}): [{estimate.lower:.12g}, {estimate.upper:.12g}] "
        f"from {estimate.starts} starts"
    )
    return estimate
