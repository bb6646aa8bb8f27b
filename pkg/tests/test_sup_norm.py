import math

import numpy as np
import pytest

from monomial_lab import DimensionError
from monomial_lab.index import enumerate_jmn
from monomial_lab.poly import (
    BallSpec,
    SparsePolynomial,
    SupNormBudget,
    certified_upper,
    monomial_sup_norm,
    random_ball_point,
    random_index_subset,
    random_polynomial,
    restrict_prefix,
    sup_norm,
    torus_grid_upper,
    transfer_coefficients,
)

RS = [1, 1.5, 2, 3, math.inf]
SMALL = SupNormBudget(restarts=4, iterations=50, seed=3)


def _random_alpha(rng, n, m_max=6):
    m = int(rng.integers(1, m_max + 1))
    return np.bincount(rng.integers(0, n, size=m), minlength=n)


def test_monomial_sup_norm_examples():
    assert monomial_sup_norm(BallSpec(1, 2), (1, 1)) == pytest.approx(0.25)
    assert monomial_sup_norm(BallSpec(math.inf, 3), (3, 1, 2)) == 1.0
    assert monomial_sup_norm(BallSpec(2, 2), (2, 0)) == pytest.approx(1.0)
    assert monomial_sup_norm(BallSpec(2, 2), ()) == 1.0


def test_monomial_sup_norm_dimension():
    with pytest.raises(DimensionError):
        monomial_sup_norm(BallSpec(2, 1), (1, 1))


def test_monomial_sup_norm_is_attained_at_the_maximizer(rng):
    for _ in range(20):
        n = int(rng.integers(1, 5))
        alpha = _random_alpha(rng, n)
        m = alpha.sum()
        for r in (1, 1.5, 2, 3):
            z = (alpha / m) ** (1 / r)
            assert np.sum(z**r) == pytest.approx(1.0)
            assert np.prod(z**alpha) == pytest.approx(monomial_sup_norm(BallSpec(r, n), alpha), rel=1e-12)


def test_monomials_are_bracketed_exactly(rng):
    for _ in range(50):
        n = int(rng.integers(1, 7))
        alpha = _random_alpha(rng, n)
        r = RS[int(rng.integers(len(RS)))]
        spec = BallSpec(r, n)
        phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
        estimate = sup_norm(SparsePolynomial.monomial(alpha, phase), spec, SMALL)
        exact = monomial_sup_norm(spec, alpha)
        assert estimate.lower == pytest.approx(exact, abs=1e-9)
        assert estimate.upper == pytest.approx(exact, abs=1e-9)


def test_single_variable_on_polydisc():
    estimate = sup_norm(SparsePolynomial({(1,): 1.0}), BallSpec(math.inf, 1), SMALL)
    assert (estimate.lower, estimate.upper) == pytest.approx((1.0, 1.0))


def test_linear_sum_on_polydisc():
    estimate = sup_norm(SparsePolynomial({(1,): 1.0, (2,): 1.0}), BallSpec(math.inf, 2), SMALL)
    assert estimate.lower >= 2 - 1e-9
    assert estimate.upper == 2.0


def test_product_on_l1():
    estimate = sup_norm(SparsePolynomial({(1, 2): 1.0}), BallSpec(1, 2), SMALL)
    assert estimate.lower == pytest.approx(0.25, abs=1e-12)
    assert estimate.upper == pytest.approx(0.25, abs=1e-12)


def test_empty_polynomial():
    estimate = sup_norm(SparsePolynomial(), BallSpec(2, 3))
    assert estimate.lower == estimate.upper == 0.0


def test_dimension_error():
    with pytest.raises(DimensionError):
        sup_norm(SparsePolynomial({(1, 4): 1.0}), BallSpec(2, 3))


@pytest.mark.parametrize("r", RS)
def test_sandwich_on_random_polynomials(r, rng):
    for _ in range(5):
        P = random_polynomial(random_index_subset(2, 4, seed=rng), seed=rng)
        estimate = sup_norm(P, BallSpec(r, 4), SMALL)
        assert 0 <= estimate.lower <= estimate.upper
        assert estimate.upper == pytest.approx(certified_upper(P, BallSpec(r, 4)))
        assert len(estimate.witness) == 4


def test_witness_lies_in_the_ball(rng):
    spec = BallSpec(1.5, 4)
    P = random_polynomial(enumerate_jmn(3, 4), seed=rng)
    estimate = sup_norm(P, spec, SMALL)
    assert np.sum(np.abs(estimate.witness) ** 1.5) <= 1 + 1e-9


def test_sup_norm_is_deterministic_across_threads(rng):
    P = random_polynomial(enumerate_jmn(2, 5), seed=rng)
    spec = BallSpec(2, 5)
    first = sup_norm(P, spec, SMALL, threads=1)
    second = sup_norm(P, spec, SMALL, threads=4)
    assert first.lower == second.lower
    np.testing.assert_array_equal(first.witness, second.witness)


@pytest.mark.parametrize("r", [1, 1.5, 2, math.inf])
def test_restriction_does_not_increase_norm(r, rng):
    spec = BallSpec(r, 5)
    for _ in range(3):
        P = random_polynomial(random_index_subset(2, 5, seed=rng), seed=rng)
        sub = restrict_prefix(P, (1,), 2)
        if len(sub) == 0:
            continue
        assert sup_norm(sub, spec, SMALL).lower <= sup_norm(P, spec, SMALL).upper * (1 + 1e-12)


@pytest.mark.parametrize("r", [1, 1.5, 2, 3])
def test_transfer_to_polydisc(r, rng):
    spec = BallSpec(r, 4)
    for _ in range(3):
        P = random_polynomial(random_index_subset(2, 4, seed=rng), seed=rng)
        w = random_ball_point(spec, seed=rng)
        Q = transfer_coefficients(P, w)
        lower = sup_norm(Q, BallSpec(math.inf, 4), SMALL).lower
        assert lower <= sup_norm(P, spec, SMALL).upper * (1 + 1e-12)


def test_torus_grid_upper():
    bound, grid_max, witness = torus_grid_upper(SparsePolynomial({(1,): 1.0, (2,): 1.0}))
    assert grid_max == pytest.approx(2.0)
    assert bound >= 2.0
    assert np.allclose(np.abs(witness), 1.0)


def test_torus_grid_tightens_the_upper_end(rng):
    P = random_polynomial(enumerate_jmn(2, 3), seed=rng)
    plain = sup_norm(P, BallSpec(math.inf, 3), SMALL)
    gridded = sup_norm(P, BallSpec(math.inf, 3), SupNormBudget(4, 50, 3, torus_grid=True))
    assert gridded.grid_upper is not None
    assert gridded.upper <= plain.upper
    assert gridded.lower <= gridded.upper


def test_torus_grid_skips_large_dimension():
    P = SparsePolynomial({tuple(range(1, 9)): 1.0})
    assert torus_grid_upper(P, max_points=2**10) is None
