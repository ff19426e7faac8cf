"""Normalization formulas and the log-weighted harmonic sum."""

import math

import pytest

from divcensus.asymptotics import (
    PI_SQUARED,
    a_asymptotic_check,
    lemma_bound_check,
    log_weighted_harmonic,
    ramanujan_check,
    ratio_point,
    ratio_table,
)
from divcensus.census import brute_force_census, brute_force_census_range, list_counterexamples


def test_ratio_table_at_one():
    (pt,) = ratio_table([1])
    assert pt.ratio == 1.0
    assert pt.theorem1_norm == 0.0  # ln 1 = 0
    assert math.isinf(pt.ramanujan_norm)
    assert math.isinf(pt.a_norm)
    assert math.isinf(pt.lemma_norm)


def test_ratio_table_at_four():
    (pt,) = ratio_table([4])
    assert pt.ratio == 17 / 18
    assert pt.theorem1_norm == pytest.approx(17 / 18 * math.log(4) / PI_SQUARED, abs=1e-15)


def test_ratio_table_validates_grid():
    with pytest.raises(ValueError):
        ratio_table([])
    with pytest.raises(ValueError):
        ratio_table([10, 10])
    with pytest.raises(ValueError):
        ratio_table([10, 5])
    with pytest.raises(ValueError):
        ratio_table([0, 5])


def test_theorem1_norm_definition_holds_to_float_precision():
    for pt in ratio_table([2, 3, 10, 97, 1000, 9973]):
        assert abs(pt.theorem1_norm - pt.ratio * math.log(pt.N) / PI_SQUARED) < 1e-12


def test_normalizations_positive_for_n_at_least_two():
    for pt in ratio_table([2, 5, 50, 500]):
        assert 0 < pt.ratio <= 1
        for value in (pt.theorem1_norm, pt.ramanujan_norm, pt.a_norm, pt.lemma_norm):
            assert value > 0


def test_ratio_is_one_below_four_and_below_one_after():
    for result in brute_force_census_range(40):
        pt = ratio_point(result)
        if result.N <= 3:
            assert pt.ratio == 1.0
        else:
            assert pt.ratio < 1.0


def test_census_gap_equals_counterexample_count():
    for result in brute_force_census_range(200):
        gap = result.b_count - result.a_count
        assert gap == len(list_counterexamples(result.N))


def test_ramanujan_check_small_formula():
    # B(2) = 5; no asymptotic content this small, just the formula itself
    want = 5 * PI_SQUARED / (2 * math.log(2) ** 3)
    assert ramanujan_check(2) == pytest.approx(want, rel=1e-15)
    assert ramanujan_check(2, result=brute_force_census(2)) == pytest.approx(want, rel=1e-15)


def test_a_asymptotic_check_small_formula():
    assert a_asymptotic_check(4) == pytest.approx(17 / (4 * math.log(4) ** 2), rel=1e-15)
    assert a_asymptotic_check(4) == pytest.approx(2.2115, abs=5e-4)


def test_lemma_bound_check_small_formula():
    (value,) = lemma_bound_check([4])
    assert value == pytest.approx(9 / (4 * math.log(4)), rel=1e-15)
    assert value == pytest.approx(1.623, abs=5e-4)


def test_checks_reject_n_below_two():
    with pytest.raises(ValueError):
        ramanujan_check(1)
    with pytest.raises(ValueError):
        a_asymptotic_check(1)
    with pytest.raises(ValueError):
        lemma_bound_check([1, 4])


def test_log_weighted_harmonic_small_values():
    assert log_weighted_harmonic(1) == 0.0
    assert log_weighted_harmonic(2) == pytest.approx(math.log(2) / 2, rel=1e-15)
    with pytest.raises(ValueError):
        log_weighted_harmonic(0)


def test_log_weighted_harmonic_matches_fsum_oracle():
    want = math.fsum(math.log(b) / b for b in range(1, 1001))
    assert log_weighted_harmonic(1000) == pytest.approx(want, abs=1e-10)


def test_log_weighted_harmonic_tracks_half_log_squared():
    for n in (10, 1000, 10**4, 10**5):
        assert abs(log_weighted_harmonic(n) - math.log(n) ** 2 / 2) <= 1.0
