import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monomial_lab import DomainError, UnsupportedSequenceError, WeightOverflowError
from monomial_lab.weights import KLogSequence, PrimeSequence, g_theta, sieve_segment, simple_sieve, weight_sequence


def test_first_primes(primes):
    assert primes.terms(10).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes.term(1000) == 7919


def test_prime_weights_are_exact_integers(primes):
    assert primes.index_weight((1, 1, 4)) == 28
    assert isinstance(primes.index_weight((3, 5)), int)
    assert primes.index_weight(()) == 1


def test_terms_upto_includes_ties(primes):
    assert primes.terms_upto(7) == [2, 3, 5, 7]
    assert primes.terms_upto(0.5) == []


def test_cutoff_rank(primes):
    assert primes.cutoff_rank(7) == 4
    assert primes.cutoff_rank(8.5) == 4
    assert primes.cutoff_rank(1.5) == 0


def test_term_index_starts_at_one(primes):
    with pytest.raises(ValueError):
        primes.term(0)


def test_simple_sieve_small():
    assert simple_sieve(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert simple_sieve(1).tolist() == []


@pytest.mark.parametrize("segment", [8, 64, 1 << 20])
def test_segmented_sieve_matches_simple_sieve(segment):
    np.testing.assert_array_equal(sieve_segment(0, 10_000, segment_odd_count=segment), simple_sieve(10_000))


def test_segmented_sieve_window():
    expected = [p for p in simple_sieve(200).tolist() if p > 100]
    assert sieve_segment(100, 200).tolist() == expected
    assert sieve_segment(200, 100).tolist() == []


def test_weight_overflow():
    seq = PrimeSequence(weight_bits=8)
    assert seq.index_weight((5, 5)) == 121
    with pytest.raises(WeightOverflowError):
        seq.index_weight((10, 10))


def test_klog_terms():
    seq = KLogSequence(1.0)
    np.testing.assert_allclose(seq.terms(3), [math.log(3), 2 * math.log(4), 3 * math.log(5)])
    assert not seq.exact
    assert seq.label == "klog:1"


def test_klog_rejects_theta_outside_range():
    with pytest.raises(DomainError):
        KLogSequence(0.0)
    with pytest.raises(DomainError):
        KLogSequence(1.5)


def test_weight_sequence_labels():
    assert weight_sequence("primes") is weight_sequence(" PRIMES ")
    assert weight_sequence("klog").theta == 1.0
    assert weight_sequence("klog:0.75").theta == 0.75
    assert weight_sequence("klog:0.75") is weight_sequence("klog:0.75")


@pytest.mark.parametrize("text", ["naturals", "klog:abc", "primes:2"])
def test_weight_sequence_rejects_unknown(text):
    with pytest.raises(ValueError):
        weight_sequence(text)


def test_g_theta():
    assert g_theta(math.e**math.e, 1.0) == pytest.approx(1.0)
    assert g_theta(math.e**16, 0.75) == pytest.approx(2.0 / 0.25)
    with pytest.raises(DomainError):
        g_theta(1.0, 1.0)


@pytest.mark.parametrize("x", [4.0, 10.0, 1e3, 1e5])
def test_klog_reciprocal_sum_bound(klog, x):
    partial, bound = klog.reciprocal_sum_bound(x)
    assert partial <= bound


def test_klog_reciprocal_sum_bound_domain(klog):
    with pytest.raises(DomainError):
        klog.reciprocal_sum_bound(3.0)


def test_prime_reciprocal_sum_bound_is_unsupported(primes):
    with pytest.raises(UnsupportedSequenceError):
        primes.reciprocal_sum_bound(100.0)


@given(st.floats(min_value=3.0, max_value=1e5))
@settings(max_examples=50, deadline=None)
def test_klog_cutoff_rank_estimate(y):
    for theta in (0.75, 1.0):
        seq = weight_sequence(f"klog:{theta}")
        l = seq.cutoff_rank(y)  # noqa: E741
        assert 2.0 ** (-theta) * l <= y / math.log(y) ** theta


@given(st.lists(st.integers(min_value=1, max_value=200), min_size=1, max_size=6))
@settings(deadline=None)
def test_log_product_ratio(entries):
    lhs, rhs = weight_sequence("primes").log_product_ratio(sorted(entries))
    assert lhs >= rhs * (1 - 1e-12)
