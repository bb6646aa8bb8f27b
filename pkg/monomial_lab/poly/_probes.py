"""Convergence and Sidon-constant probes at desk scale.

These functions produce data about asymptotic statements (block sums of
monomial expansions, Sidon constants of character sets, norms of random sign
polynomials). None of them asserts a limit.
"""

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from monomial_lab._calibration import ksz_constant
from monomial_lab._constants import DEFAULT_SEED, BlockClosure, Family
from monomial_lab._errors import DomainError
from monomial_lab._settings import LOGGER
from monomial_lab._util import compensated_sum, ordered_map
from monomial_lab.index import MultiIndex, WeightedFamilySpec, count_jmn, enumerate_family, enumerate_jmn
from monomial_lab.poly._ball import BallSpec
from monomial_lab.poly._norm import SupNormBudget, certified_upper, monomial_sup_norm, sup_norm, torus_grid_upper
from monomial_lab.poly._points import ModulusTable, as_point
from monomial_lab.poly._polynomial import Coefficients, coefficient_lookup
from monomial_lab.poly._random import random_sign_polynomial
from monomial_lab.weights import weight_sequence


@dataclass
class BlockSums:
    """Per-block sums ``S_N`` of ``|c_j u_j|`` over weight blocks and their running totals."""

    base: float
    closure: BlockClosure
    sums: List[float]
    counts: List[int]
    inputs: Dict[str, Any] = field(default_factory=dict)

    @property
    def cumulative(self) -> List[float]:
        return [compensated_sum(self.sums[: k + 1]) for k in range(len(self.sums))]

    @property
    def total(self) -> float:
        return compensated_sum(self.sums)

    def rows(self) -> List[Dict[str, Any]]:
        return [
            {"N": N, "count": count, "S": value, "cumulative": total}
            for N, (count, value, total) in enumerate(zip(self.counts, self.sums, self.cumulative))
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inputs": self.inputs,
            "base": self.base,
            "closure": self.closure.value,
            "total": self.total,
            "rows": self.rows(),
        }


def block_partial_sums(
    coeffs: Coefficients,
    u,
    seq,
    base: float,
    N_max: int,
    closure: BlockClosure = BlockClosure.RIGHT,
    degree: Optional[int] = None,
    cap: Optional[int] = None,
) -> BlockSums:
    """Sums ``S_N`` of ``|c_j u_j|`` over the blocks ``base^N < q_j <= base^(N+1)``, ``N = 0 .. N_max``.

    With the right-closed blocks the first block also holds ``q_j <= base``
    (the empty index among them), so the blocks partition ``J(base^(N_max+1))``
    and the totals equal :func:`weighted_sum` over it. ``closure="left"``
    uses ``base^N <= q_j < base^(N+1)`` instead. ``degree`` restricts to
    indices of that length.
    """
    seq = weight_sequence(seq)
    closure = BlockClosure(closure)
    if not base > 1:
        raise DomainError(f"The block base must exceed 1, got {base}")
    if N_max < 0:
        raise DomainError(f"N_max must be nonnegative, got {N_max}")
    thresholds = [base ** (N + 1) for N in range(N_max + 1)]
    family = Family.JX if degree is None else Family.JXM
    spec = WeightedFamilySpec(seq, thresholds[-1], family, m=degree)
    lookup = coefficient_lookup(coeffs)
    table = ModulusTable(u)
    values: List[List[float]] = [[] for _ in thresholds]
    for j in enumerate_family(spec, cap=cap):
        q = seq.index_weight(j)
        block = bisect_left(thresholds, q) if closure is BlockClosure.RIGHT else bisect_right(thresholds, q)
        if block > N_max:
            continue
        c = lookup(j)
        values[block].append(abs(c) * table.monomial(j) if c else 0.0)
    result = BlockSums(
        base,
        closure,
        [compensated_sum(block) for block in values],
        [len(block) for block in values],
        {"weights": seq.label, "N_max": N_max, "degree": degree, "point": as_point(u).to_dict()},
    )
    LOGGER.debug(f"Block sums over {sum(result.counts)} indices, base {base}, total {result.total:.12g}")
    return result


@dataclass
class SidonEstimate:
    """Certified lower bound of the Sidon-type constant of an index set."""

    value: float
    numerator: float
    best_seed: int
    best_upper: float
    seeds: int
    inputs: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "numerator": self.numerator,
            "best_seed": self.best_seed,
            "best_upper": self.best_upper,
            "seeds": self.seeds,
            "inputs": self.inputs,
        }


def _monomial_mass(J: List[MultiIndex], spec: BallSpec) -> float:
    """``max_u sum_j |u_j|`` over the monomial maximizers and the uniform point of the ball."""
    if spec.is_infinite:
        return float(len(J))
    exponents = [np.bincount(np.asarray(j, dtype=np.int64) - 1, minlength=spec.n) for j in J]
    candidates = [np.full(spec.n, spec.n ** (-spec.inv_r))]
    for alpha in exponents:
        m = alpha.sum()
        candidates.append((alpha / m) ** spec.inv_r if m > 0 else candidates[0])
    best = 0.0
    for t, rho in enumerate(candidates):
        own = t - 1
        mass = compensated_sum(
            monomial_sup_norm(spec, alpha) if s == own else float(np.prod(rho**alpha))
            for s, alpha in enumerate(exponents)
        )
        best = max(best, mass)
    return best


def sidon_estimate(
    J: Iterable[Sequence[int]],
    spec: BallSpec,
    seeds: int = 200,
    seed: int = DEFAULT_SEED,
    threads: Optional[int] = None,
) -> SidonEstimate:
    """Lower bound ``max_eps (sum_j |u_j|) / upper(||sum_j eps_j z_j||)`` over random signs.

    For every sign pattern and admissible ``u``,
    ``sum_j |u_j| <= chi ||P_eps|| <= chi upper(P_eps)``, so each quotient is
    a valid lower bound of the unconditional constant ``chi``. On ``ℓ_inf``
    ``u = (1, ..., 1)`` gives ``|J|`` and the upper norm also uses the FFT
    torus grid. Sign pattern ``k`` comes from ``default_rng([seed, k])``.
    """
    J = sorted({j if isinstance(j, MultiIndex) else MultiIndex(j) for j in J})
    if not J:
        raise DomainError("The Sidon estimate needs a nonempty index set")
    if seeds < 1:
        raise DomainError(f"Need at least one seed, got {seeds}")
    n_vars = max(j.max_entry for j in J)
    if n_vars > spec.n:
        spec = spec.with_dimension(n_vars)
    numerator = _monomial_mass(J, spec)

    def upper(k: int) -> float:
        P = random_sign_polynomial(J, seed=np.random.default_rng([seed, k]))
        value = certified_upper(P, spec)
        if spec.is_infinite:
            grid = torus_grid_upper(P)
            if grid is not None:
                value = min(value, grid[0])
        return value

    uppers = ordered_map(upper, range(seeds), threads)
    best_seed = int(np.argmin(uppers))
    best_upper = uppers[best_seed]
    value = numerator / best_upper
    LOGGER.info(f"Sidon lower bound {value:.6g} for |J| = {len(J)} on ℓ_{spec.label} from {seeds} sign patterns")
    return SidonEstimate(
        value, numerator, best_seed, best_upper, seeds, {"ball": spec.to_dict(), "size": len(J), "seed": seed}
    )


def sidon_lower_bound(
    J: Iterable[Sequence[int]],
    spec: BallSpec,
    seeds: int = 200,
    seed: int = DEFAULT_SEED,
    threads: Optional[int] = None,
) -> float:
    """Value of :func:`sidon_estimate`; exactly 1 for a single monomial."""
    return sidon_estimate(J, spec, seeds=seeds, seed=seed, threads=threads).value


def one_variable_powers(size: int) -> List[MultiIndex]:
    """``{1, z_1, ..., z_1^(size-1)}`` as multi-indices."""
    return [MultiIndex((1,) * k) for k in range(size)]


def ksz_probe(
    ns: Sequence[int],
    m: int,
    seeds: int = 200,
    seed: int = DEFAULT_SEED,
    budget: Optional[SupNormBudget] = None,
    threads: Optional[int] = None,
) -> List[Dict[str, Any]]:
    """Norms of random sign polynomials on ``J(m, n)`` on the torus against ``sqrt(n |J|)``.

    Per ``n``: the smallest certified upper norm over the sign patterns, the
    sup-norm lower estimate of that pattern, and the references
    ``sqrt(n |J|)`` and ``C sqrt(n |J| log m)`` (calibrated ``C``).
    """
    budget = SupNormBudget(restarts=8, iterations=100, seed=seed) if budget is None else budget
    rows = []
    for n in ns:
        J = list(enumerate_jmn(m, n))
        spec = BallSpec(math.inf, n)
        patterns = [random_sign_polynomial(J, seed=np.random.default_rng([seed, k])) for k in range(seeds)]

        def upper(P) -> float:
            value = certified_upper(P, spec)
            grid = torus_grid_upper(P)
            return value if grid is None else min(value, grid[0])

        uppers = ordered_map(upper, patterns, threads)
        best = int(np.argmin(uppers))
        estimate = sup_norm(patterns[best], spec, budget, threads=threads)
        size = count_jmn(m, n)
        row = {
            "n": n,
            "m": m,
            "size": size,
            "min_upper": uppers[best],
            "lower": estimate.lower,
            "best_seed": best,
            "sqrt_n_size": math.sqrt(n * size),
        }
        if m >= 2:
            row["ksz_reference"] = ksz_constant() * math.sqrt(n * size * math.log(m))
        rows.append(row)
    return rows


@dataclass
class BohrSetStatistic:
    """``(1 / log n) sum_{k <= n} |u*_k|^2`` along ``n = 2 .. N`` for the decreasing rearrangement ``u*``."""

    ns: np.ndarray
    values: np.ndarray

    @property
    def tail_max(self) -> float:
        """Largest value over the second half of the range, a finite proxy of the lim sup."""
        if len(self.values) == 0:
            return math.nan
        return float(self.values[len(self.values) // 2 :].max())

    def rows(self) -> List[Dict[str, Any]]:
        return [{"n": int(n), "statistic": float(v)} for n, v in zip(self.ns, self.values)]


def bohr_set_statistic(u, N: int) -> BohrSetStatistic:
    """The statistic separating the two sets that sandwich the monomial convergence set on ``B(ℓ_inf)``."""
    if N < 2:
        raise DomainError(f"The statistic needs N >= 2, got {N}")
    moduli = np.abs(as_point(u).values(N))
    rearranged = np.sort(moduli)[::-1]
    partial = np.cumsum(rearranged**2)
    ns = np.arange(2, N + 1)
    return BohrSetStatistic(ns, partial[1:] / np.log(ns))
