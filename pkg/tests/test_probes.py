import math

import numpy as np
import pytest
from scipy import stats

from monomial_lab import DomainError
from monomial_lab.index import MultiIndex, WeightedFamilySpec, enumerate_family, multiplicity
from monomial_lab.poly import (
    BallSpec,
    PowerLogPoint,
    SupNormBudget,
    block_partial_sums,
    bohr_set_statistic,
    ksz_probe,
    one_variable_powers,
    random_sign_polynomial,
    sidon_estimate,
    sidon_lower_bound,
    weighted_sum,
)


@pytest.fixture
def field_32(primes, rng):
    family = list(enumerate_family(WeightedFamilySpec(primes, 32)))
    return dict(zip(family, rng.standard_normal(len(family)))), rng.uniform(0, 1, 11)


def test_right_closed_blocks_partition_the_family(primes, field_32):
    coeffs, u = field_32
    blocks = block_partial_sums(coeffs, u, primes, 2, 4)
    assert blocks.counts == [2, 2, 4, 8, 16]
    direct = weighted_sum(coeffs, u, enumerate_family(WeightedFamilySpec(primes, 32)))
    assert blocks.total == pytest.approx(direct, rel=1e-12)
    assert blocks.rows()[-1]["cumulative"] == pytest.approx(blocks.total)


def test_left_closed_blocks(primes, field_32):
    coeffs, u = field_32
    blocks = block_partial_sums(coeffs, u, primes, 2, 4, closure="left")
    assert blocks.counts == [1, 2, 4, 8, 16]
    assert blocks.to_dict()["closure"] == "left"


def test_blocks_by_degree(primes, field_32):
    coeffs, u = field_32
    blocks = block_partial_sums(coeffs, u, primes, 2, 4, degree=2)
    assert sum(blocks.counts) == 10
    assert blocks.counts[0] == 0


@pytest.mark.parametrize("base, N_max", [(1.0, 3), (2.0, -1)])
def test_block_arguments(primes, base, N_max):
    with pytest.raises(DomainError):
        block_partial_sums({}, [1.0], primes, base, N_max)


@pytest.mark.parametrize("r", [1, 2, math.inf])
def test_sidon_singleton(r):
    assert sidon_lower_bound([(1,)], BallSpec(r, 1), seeds=5) == 1.0


def test_sidon_disjoint_monomials_on_polydisc():
    estimate = sidon_estimate([(1,), (2,)], BallSpec(math.inf, 2), seeds=10)
    assert estimate.numerator == 2.0
    assert 1.0 <= estimate.value <= 2.0
    assert estimate.to_dict()["seeds"] == 10


def test_sidon_grows_the_dimension():
    estimate = sidon_estimate([(1, 3)], BallSpec(2, 1), seeds=3)
    assert estimate.inputs["ball"]["n"] == 3


def test_sidon_errors():
    with pytest.raises(DomainError):
        sidon_estimate([], BallSpec(2, 1))
    with pytest.raises(DomainError):
        sidon_estimate([(1,)], BallSpec(2, 1), seeds=0)


def test_sidon_deterministic_across_threads():
    J = one_variable_powers(12)
    one = sidon_estimate(J, BallSpec(math.inf, 1), seeds=16, seed=7, threads=1)
    many = sidon_estimate(J, BallSpec(math.inf, 1), seeds=16, seed=7, threads=4)
    assert one.to_dict() == many.to_dict()


def test_one_variable_powers():
    assert one_variable_powers(3) == [MultiIndex(()), MultiIndex((1,)), MultiIndex((1, 1))]


def test_sidon_powers_grow():
    spec = BallSpec(math.inf, 1)
    small = sidon_lower_bound(one_variable_powers(4), spec, seeds=20)
    large = sidon_lower_bound(one_variable_powers(32), spec, seeds=20)
    assert large > small


@pytest.mark.optional
def test_sidon_powers_square_root_growth():
    sizes = [4, 8, 16, 32]
    values = [sidon_lower_bound(one_variable_powers(size), BallSpec(math.inf, 1), seeds=200) for size in sizes]
    assert all(a < b for a, b in zip(values, values[1:]))
    slope = stats.linregress(np.log(sizes), np.log(values)).slope
    assert 0.3 <= slope <= 0.7


def test_ksz_probe_rows():
    rows = ksz_probe([2, 3], 2, seeds=4, budget=SupNormBudget(restarts=2, iterations=20, seed=0))
    assert [row["n"] for row in rows] == [2, 3]
    assert rows[0]["size"] == 3
    for row in rows:
        assert row["lower"] <= row["min_upper"] * (1 + 1e-12)
        assert row["sqrt_n_size"] == pytest.approx(math.sqrt(row["n"] * row["size"]))
        assert "ksz_reference" in row


def test_bohr_statistic_on_ones():
    statistic = bohr_set_statistic(np.ones(10), 10)
    assert list(statistic.ns) == list(range(2, 11))
    np.testing.assert_allclose(statistic.values, statistic.ns / np.log(statistic.ns))
    assert statistic.rows()[0] == {"n": 2, "statistic": pytest.approx(2 / math.log(2))}


def test_bohr_statistic_square_root_decay():
    statistic = bohr_set_statistic(PowerLogPoint(0.5), 10_000)
    assert 1.0 < statistic.tail_max < 1.2


def test_bohr_statistic_needs_two_terms():
    with pytest.raises(DomainError):
        bohr_set_statistic([1.0], 1)


def test_random_sign_polynomial():
    J = [(1, 2), (1, 1), (2, 2)]
    P = random_sign_polynomial(J, seed=5)
    assert P == random_sign_polynomial(list(reversed(J)), seed=5)
    assert {abs(c) for c in P.coeffs.values()} == {1.0}
    weighted = random_sign_polynomial(J, seed=5, weighted=True)
    for j, c in weighted.items():
        assert abs(c) == multiplicity(j)
