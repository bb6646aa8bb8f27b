import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monomial_lab import SCHEMA, DomainError
from monomial_lab.bounds import (
    BOHR_CONSTANT,
    BoundReport,
    TrendFit,
    bohr_lower_bound,
    bohr_trend,
    bound_names,
    build_report,
    chi_upper,
    cmr_report,
    constant_cmr,
    effective_constant,
    h_grid_check,
    h_maximizer,
    holomorphic_thresholds,
    kq_envelope,
    kq_master_bound,
    log_constant_cmr,
    mon_polynomial_exponents,
    polynomial_bound,
    polynomial_bound_report,
    recommended_y,
    recommended_y_report,
    sigma,
    sigma_m,
    sweep,
)


@pytest.mark.parametrize(
    "m, r, expected",
    [(1, 1, math.e), (2, 2, 8.9634), (2, math.inf, 7.6885), (3, 1, 3 * math.e**3), (3, 4, 6 * math.e)],
)
def test_constant_cmr(m, r, expected):
    assert constant_cmr(m, r) == pytest.approx(expected, abs=1e-4)


def test_cmr_notes_both_branches_at_two():
    report = cmr_report(2, 2)
    assert report.intermediates["branch"] == "r<=2"
    assert report.intermediates["alternative"] == pytest.approx(constant_cmr(2, math.inf))
    assert report.notes
    assert not cmr_report(2, 3).notes


@pytest.mark.parametrize("m", [0, -1, 1.5])
def test_constant_cmr_degree(m):
    with pytest.raises(DomainError):
        constant_cmr(m, 2)


@pytest.mark.parametrize(
    "m, r, expected",
    [
        (800, 1, 1 + math.log(800) + 799),
        (2000, 2, 1 + math.log(2000) + 1999 / 2),
        (3000, math.inf, 1 + math.log(3000) + 2999 / 2 * math.log(2)),
        (10**6, 1.5, 1 + math.log(10**6) + (10**6 - 1) / 1.5),
    ],
)
def test_constant_cmr_large_degree(m, r, expected):
    assert log_constant_cmr(m, r) == pytest.approx(expected)
    assert constant_cmr(m, r) == math.inf


@pytest.mark.parametrize("m, r", [(1, 1), (5, 2), (7, 4), (12, math.inf)])
def test_log_constant_cmr_matches(m, r):
    assert log_constant_cmr(m, r) == pytest.approx(math.log(constant_cmr(m, r)))


def test_chi_upper():
    assert chi_upper(2, math.inf, 4) == pytest.approx(15.377, abs=1e-3)
    assert chi_upper(3, 1, 1) == chi_upper(3, 1, 10**6) == constant_cmr(3, 1)
    with pytest.raises(DomainError):
        chi_upper(2, 2, 0)


def test_sigma():
    assert sigma(1) == 0
    assert sigma(2) == sigma(math.inf) == sigma(7) == 0.5
    assert sigma(1.5) == pytest.approx(1 / 3)


def test_sigma_m():
    assert sigma_m(1, 3) == 0
    assert sigma_m(2, 2) == pytest.approx(0.25)
    assert abs(sigma_m(10**6, 2) - 0.5) < 1e-6


def test_recommended_y():
    assert recommended_y(math.e**100, 1) == pytest.approx(2.1715, abs=1e-4)
    assert not recommended_y_report(math.e**100, 1).flags


def test_recommended_y_clamped():
    report = recommended_y_report(100.0, 1)
    assert report.flags == ["y-clamped"]
    assert report.value == pytest.approx(2.0 + 1e-9)
    assert report.intermediates["raw"] < 2


@pytest.mark.parametrize("x, theta", [(10.0, 1), (100.0, 0.5), (100.0, 1.2)])
def test_recommended_y_domain(x, theta):
    with pytest.raises(DomainError):
        recommended_y(x, theta)


def test_h_maximizer_log_variant():
    M, h = h_maximizer(math.e**100, math.e**4, math.e**2, "log")
    assert M == pytest.approx(math.sqrt(50))
    assert h == pytest.approx(-4 * math.sqrt(50))
    check = h_grid_check(math.e**100, math.e**4, math.e**2, "log", m_max=50)
    assert check["maximal"]
    assert check["grid_argmax"] == 7


def test_h_maximizer_printed_variant():
    M, _ = h_maximizer(math.e**100, math.e**4, 2.0, "printed")
    assert M == pytest.approx(math.sqrt(50))


@given(
    log_x=st.floats(1.0, 500.0),
    log_y=st.floats(0.5, 10.0),
    log_C=st.floats(-2.0, 0.4),
)
def test_h_maximizer_dominates_integer_grid(log_x, log_y, log_C):
    check = h_grid_check(math.exp(log_x), math.exp(log_y), math.exp(log_C), "log", m_max=100)
    assert check["maximal"]


def test_h_maximizer_domain():
    with pytest.raises(DomainError):
        h_maximizer(math.e**10, math.e, math.e**2, "log")
    with pytest.raises(DomainError):
        h_maximizer(1.0, math.e**4, 2.0)


def test_polynomial_bound():
    assert polynomial_bound(2, math.inf, math.e**math.e) == pytest.approx(math.exp(math.e / 4) / math.exp(0.5))
    assert polynomial_bound(1, math.inf, 10**9) == 1.0
    assert polynomial_bound(2, 1, 10**9) == 1.0
    assert polynomial_bound_report(2, 3, 100.0).flags == ["unnormalized"]
    with pytest.raises(DomainError):
        polynomial_bound(2, 2, 2.0)


def test_kq_master_bound_report(primes):
    report = kq_master_bound(primes, 1000.0, y=3, r=2)
    assert report.flags == ["empirical-constant"]
    assert report.intermediates["l"] == 2
    assert report.intermediates["q1"] == 2.0
    assert report.intermediates["q_l_plus_1"] == 5.0
    assert report.intermediates["m_max"] == 4
    assert [item["m"] for item in report.intermediates["per_m"]] == [1, 2, 3, 4]
    assert report.intermediates["per_m"][0]["log_size"] == 0.0
    assert report.value == pytest.approx(math.exp(report.intermediates["log_value"]))
    assert report.intermediates["log_ratio"] == pytest.approx(report.intermediates["log_value"] - 0.5 * math.log(1000))


def test_kq_master_bound_given_constant(primes):
    assert not kq_master_bound(primes, 1000.0, y=3, r=2, c=0.5).flags


def test_kq_master_bound_klog_default_y():
    report = kq_master_bound("klog:1", 10**4, r=math.inf)
    assert "y-clamped" in report.flags
    assert report.inputs["c"] == pytest.approx(1 / math.log(3) + 1 / (2 * math.log(4)) + 1 / (3 * math.log(5)))


def test_kq_master_bound_geometric_constant(primes):
    cmr = kq_master_bound(primes, 1000.0, y=3, r=1.5)
    geometric = kq_master_bound(primes, 1000.0, y=3, r=1.5, constant="geometric")
    assert geometric.value >= cmr.value


def test_kq_master_bound_is_monotone_in_x(primes):
    values = [kq_master_bound(primes, x, y=3, r=2).value for x in (100.0, 1e3, 1e4, 1e5)]
    assert values == sorted(values)


def test_kq_master_bound_errors(primes):
    with pytest.raises(DomainError):
        kq_master_bound("klog:0.5", 1000.0, y=3)
    with pytest.raises(DomainError):
        kq_master_bound(primes, 1000.0, y=2)
    with pytest.raises(ValueError, match="Unknown constant"):
        kq_master_bound(primes, 1000.0, y=3, constant="other")


def test_bohr_lower_bound_r1_is_constant():
    for n in (1, 10, 1000):
        assert bohr_lower_bound(n, 1).value == pytest.approx(BOHR_CONSTANT)


@pytest.mark.parametrize("r", [1, 2, math.inf])
def test_bohr_lower_bound_large_dimension(r):
    report = bohr_lower_bound(4096, r)
    assert report.inputs["m_max"] == 8192
    assert 0 < report.value <= BOHR_CONSTANT
    assert 0 < report.intermediates["reduction_form"] < 1
    if r == 1:
        assert report.value == pytest.approx(BOHR_CONSTANT)


def test_bohr_per_degree_radius():
    report = bohr_lower_bound(4, math.inf)
    radius = {item["m"]: item["radius"] for item in report.intermediates["per_m"]}
    assert radius[2] == pytest.approx(chi_upper(2, math.inf, 4) ** -0.5)
    assert report.intermediates["reference_sqrt"] == pytest.approx(math.sqrt(math.log(4) / 4))


def test_bohr_given_sizes():
    report = bohr_lower_bound(5, 2, sizes={1: 1, 2: 5})
    assert report.intermediates["family"] == "given"
    assert report.value == pytest.approx(BOHR_CONSTANT * 5 ** (-0.25))
    with pytest.raises(DomainError):
        bohr_lower_bound(5, 2, sizes={2: 0})


@pytest.mark.parametrize("r", [1, 2, math.inf])
def test_bohr_trend_recovers_the_exponent(r):
    probe = bohr_trend([16, 64, 256, 1024, 4096], r)
    assert probe.fits["exponent"].within(0.1)


def test_bohr_trend_needs_two():
    with pytest.raises(DomainError):
        bohr_trend([1, 10], 2)


@pytest.mark.parametrize("weights", ["klog:0.75", "klog:1"])
@pytest.mark.parametrize("r", [1.5, 2, math.inf])
def test_kq_envelope_decay(weights, r):
    probe = kq_envelope(weights, [10.0**k for k in range(2, 7)], r)
    assert len(probe.rows) == 5
    assert probe.fits["decay"].slope < 0
    assert set(probe.fits) == {"log_ratio", "log_prefix", "decay"}
    assert probe.inputs["C"] == effective_constant(r)


def test_trend_fit():
    fit = TrendFit.fit([0, 1, 2], [1, 3, 5], target=2)
    assert fit.slope == pytest.approx(2)
    assert fit.within(1e-9)
    with pytest.raises(ValueError):
        TrendFit.fit([0], [1])
    with pytest.raises(ValueError):
        TrendFit.fit([0, 1], [0, 1]).within(0.1)


@pytest.mark.parametrize(
    "m, r, regime, value",
    [
        (1, 3, "linear", 3.0),
        (2, math.inf, "r=inf", 4.0),
        (2, 1, "r=1", 1.0),
        (2, 4, "2<=r<inf", 2.0),
        (2, 1.5, "1<r<2", 1.2),
    ],
)
def test_mon_polynomial_exponents(m, r, regime, value):
    report = mon_polynomial_exponents(m, r)
    assert report.intermediates["regime"] == regime
    assert report.value == pytest.approx(value)
    assert report.intermediates["exact"] == (regime in ("linear", "r=inf", "r=1"))


@pytest.mark.parametrize("r, value", [(1, 1.0), (1.5, 5 / 6), (2, 0.75), (4, 0.25), (math.inf, 0.0)])
def test_holomorphic_thresholds(r, value):
    report = holomorphic_thresholds(r)
    assert report.value == pytest.approx(value)
    assert report.value >= report.intermediates["necessary_beta"]


def test_holomorphic_lorentz_exponent():
    assert holomorphic_thresholds(4).intermediates["lorentz_s"] == pytest.approx(4 / 3)
    assert "lorentz_s" not in holomorphic_thresholds(1).intermediates


def test_report_json_replay():
    for report in (cmr_report(2, 2), kq_master_bound("primes", 1000.0, y=3), mon_polynomial_exponents(2, math.inf)):
        text = report.to_json()
        assert json.loads(text)["schema"] == SCHEMA
        assert BoundReport.from_json(text).to_dict() == report.to_dict()


def test_report_schema_mismatch():
    data = cmr_report(1, 1).to_dict()
    data["schema"] = "other/0"
    with pytest.raises(ValueError, match="Unsupported report schema"):
        BoundReport.from_dict(data)


def test_registry():
    assert "kq-master" in bound_names()
    assert build_report("cmr", {"m": 2, "r": 2, "x": None}).value == pytest.approx(8.9634, abs=1e-4)
    with pytest.raises(ValueError, match="--j-star-size"):
        build_report("chi", {"m": 2, "r": 2})
    with pytest.raises(ValueError, match="Unknown bound"):
        build_report("nope", {})


def test_registry_h_report():
    report = build_report("h", {"x": math.e**100, "y": math.e**4, "C": math.e**2, "variant": "log"})
    assert report.intermediates["maximal"]
    assert report.intermediates["M"] == pytest.approx(math.sqrt(50))


def test_sweep():
    reports = list(sweep("cmr", {"r": 2}, {"m": [1, 2, 3]}))
    assert [report.inputs["m"] for report in reports] == [1, 2, 3]
    assert reports[1].value == pytest.approx(constant_cmr(2, 2))
