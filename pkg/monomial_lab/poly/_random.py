"""Random polynomials and index sets.

This module provides the random instances used by the inequality suites and
by the Sidon and Kahane-Salem-Zygmund probes.

Functions
---------
random_sign_polynomial : Polynomial with i.i.d. random signs on an index set.
random_polynomial : Polynomial with complex Gaussian coefficients on an index set.
random_index_subset : Random nonempty subset of J(m, n).
random_ball_point : Random point of the unit ball of ℓ_r^n.
"""

from typing import Iterable, List, Optional, Sequence

import numpy as np

from monomial_lab._util import as_generator
from monomial_lab.index import MultiIndex, enumerate_jmn, multiplicity
from monomial_lab.poly._ball import BallSpec
from monomial_lab.poly._polynomial import SparsePolynomial


def _sorted_indices(J: Iterable[Sequence[int]]) -> List[MultiIndex]:
    return sorted({j if isinstance(j, MultiIndex) else MultiIndex(j) for j in J})


def random_sign_polynomial(J, seed=None, weighted: bool = False) -> SparsePolynomial:
    """Polynomial ``sum_j eps_j z_j`` with independent signs ``eps_j = +-1``.

    Parameters
    ----------
    J : iterable of multi-indices
        Finite index set. Duplicates are ignored.
    seed : int, numpy.random.Generator or None, optional
        Seed or generator. The signs are drawn in lexicographic order of ``J``,
        so the same seed gives the same polynomial whatever the order of ``J``.
    weighted : bool, optional
        Use ``eps_j |j|`` (the multiplicity of ``j``) as coefficients instead.

    Returns:
        SparsePolynomial
            The random polynomial, with ``len(J)`` terms.
    """
    indices = _sorted_indices(J)
    rng = as_generator(seed)
    signs = rng.choice(np.array([-1.0, 1.0]), size=len(indices))
    if weighted:
        return SparsePolynomial((j, s * multiplicity(j)) for j, s in zip(indices, signs))
    return SparsePolynomial(zip(indices, signs))


def random_polynomial(J, seed=None, real: bool = False) -> SparsePolynomial:
    """Polynomial with standard complex Gaussian coefficients on ``J``.

    Parameters
    ----------
    J : iterable of multi-indices
        Finite index set.
    seed : int, numpy.random.Generator or None, optional
        Seed or generator.
    real : bool, optional
        Draw real Gaussian coefficients instead.

    Returns:
        SparsePolynomial
    """
    indices = _sorted_indices(J)
    rng = as_generator(seed)
    values = rng.standard_normal(len(indices))
    if not real:
        values = (values + 1j * rng.standard_normal(len(indices))) / np.sqrt(2.0)
    return SparsePolynomial(zip(indices, values))


def random_index_subset(m: int, n: int, seed=None, size: Optional[int] = None) -> List[MultiIndex]:
    """Random nonempty subset of ``J(m, n)`` in lexicographic order.

    Parameters
    ----------
    m, n : int
        Degree and number of variables.
    seed : int, numpy.random.Generator or None, optional
        Seed or generator.
    size : int or None, optional
        Subset size; uniform in ``[1, |J(m, n)|]`` when omitted.

    Returns:
        list of MultiIndex
    """
    rng = as_generator(seed)
    universe = list(enumerate_jmn(m, n))
    if size is None:
        size = int(rng.integers(1, len(universe) + 1))
    if not 1 <= size <= len(universe):
        raise ValueError(f"size must lie in [1, {len(universe)}], got {size}")
    chosen = np.sort(rng.choice(len(universe), size=size, replace=False))
    return [universe[k] for k in chosen]


def random_ball_point(spec: BallSpec, seed=None, complex_values: bool = True) -> np.ndarray:
    """Random point of the closed unit ball of ``ℓ_r^n``.

    Moduli are drawn uniformly, rescaled into the ball by a uniform radius
    factor; phases are uniform.

    Parameters
    ----------
    spec : BallSpec
        The ball.
    seed : int, numpy.random.Generator or None, optional
        Seed or generator.
    complex_values : bool, optional
        Draw uniform phases (otherwise the point is nonnegative).

    Returns:
        numpy.ndarray
            Complex vector of length ``spec.n`` with ``||u||_r <= 1``.
    """
    rng = as_generator(seed)
    moduli = rng.uniform(0.0, 1.0, spec.n)
    if not spec.is_infinite:
        norm = np.sum(moduli**spec.r_float) ** spec.inv_r
        if norm > 0:
            moduli = moduli / norm * rng.uniform(0.0, 1.0)
    phases = rng.uniform(0.0, 2.0 * np.pi, spec.n) if complex_values else np.zeros(spec.n)
    return moduli * np.exp(1j * phases)
