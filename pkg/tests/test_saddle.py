"""Direction function, saddle points, and log-space estimators."""

import math
import warnings

import pytest

from polybern.exactcomb import c_relative, log_of_count, ml_degree, poly_bernoulli
from polybern.saddle import (
    DIAG_RATIO_C,
    ML_DEGREE_GF,
    POLY_BERNOULLI_GF,
    SECOND_ORDER_C,
    CompactnessWarning,
    acsv_general_log,
    bivar_asym_log,
    d_diag_asym_log,
    diag_asym_log,
    excedance_asym_log,
    f_dir,
    f_inverse,
    ml_asym_log,
    saddle_point,
)

LOG2 = math.log(2.0)


def test_f_at_log2_is_one():
    assert f_dir(LOG2) == pytest.approx(1.0, abs=1e-12)


def test_f_at_one():
    assert f_dir(1.0) == pytest.approx(1.2688211094982893, abs=1e-12)


def test_f_monotone_increasing():
    grid = [0.05 * 1.2**i for i in range(40)]
    values = [f_dir(t) for t in grid]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_f_small_t_leading_order():
    t = 1e-6
    assert f_dir(t) == pytest.approx(-1.0 / math.log(t), rel=0.05)


def test_f_rejects_nonpositive_and_huge():
    with pytest.raises(ValueError):
        f_dir(0.0)
    with pytest.raises(ValueError):
        f_dir(-1.0)
    with pytest.raises(ValueError):
        f_dir(701.0)


def test_f_inverse_at_one():
    assert f_inverse(1.0) == pytest.approx(LOG2, abs=1e-12)


def test_f_inverse_round_trip_wide_grid():
    for i in range(200):
        r = 0.05 * 400.0 ** (i / 199.0)
        t = f_inverse(r)
        assert abs(f_dir(t) - r) <= 1e-11 * max(1.0, r)


def test_f_inverse_handles_extreme_ratios():
    t = f_inverse(1.0 / 50.0)
    assert abs(f_dir(t) - 0.02) <= 1e-12
    t = f_inverse(50.0)
    assert abs(f_dir(t) - 50.0) <= 1e-11 * 50.0


def test_f_inverse_rejects_nonpositive():
    with pytest.raises(ValueError):
        f_inverse(0.0)


def test_f_inverse_round_trip_in_t():
    assert f_inverse(f_dir(2.0)) == pytest.approx(2.0, abs=1e-12)


def test_f_inverse_reciprocal_pair_on_variety():
    t1 = f_inverse(10.0)
    t2 = f_inverse(0.1)
    assert math.exp(-t1) + math.exp(-t2) == pytest.approx(1.0, abs=1e-12)


def test_saddle_point_symmetric_direction():
    sp = saddle_point(7, 7)
    assert sp.a == pytest.approx(LOG2, abs=1e-12)
    assert sp.b == pytest.approx(LOG2, abs=1e-12)


def test_saddle_point_variety_identity():
    for n, k in [(3, 11), (11, 3), (10, 12), (1, 50)]:
        sp = saddle_point(n, k)
        assert math.exp(-sp.a) + math.exp(-sp.b) == pytest.approx(1.0, abs=1e-11)


def test_saddle_point_critical_equation():
    for n in range(1, 51):
        for k in range(1, 51):
            sp = saddle_point(n, k)
            lhs = k * sp.a * math.exp(-sp.a)
            rhs = n * sp.b * math.exp(-sp.b)
            assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), abs(rhs))


def test_saddle_point_swap_swaps_components():
    sp = saddle_point(5, 9)
    sq = saddle_point(9, 5)
    assert sp.a == pytest.approx(sq.b, abs=1e-11)
    assert sp.b == pytest.approx(sq.a, abs=1e-11)


def test_correction_constants():
    expected = (2 * LOG2**3 + 3 * LOG2**2 - 12 * LOG2 + 6) / (16 * (1 - LOG2) ** 2)
    assert SECOND_ORDER_C == pytest.approx(expected, rel=1e-15)
    assert SECOND_ORDER_C == pytest.approx(-0.13962990570650863, abs=1e-16)
    assert DIAG_RATIO_C == pytest.approx(SECOND_ORDER_C - 0.5, rel=1e-15)


def test_bivar_log_frozen_value():
    assert bivar_asym_log(10, 12) == pytest.approx(42.08249346629643, rel=1e-14)


def test_bivar_matches_diagonal_form():
    for k in (5, 20, 50):
        assert bivar_asym_log(k, k) == pytest.approx(diag_asym_log(k, 1), abs=1e-10)


def test_bivar_off_diagonal_accuracy():
    log_exact = log_of_count(poly_bernoulli(20, 30))
    assert abs(math.exp(log_exact - bivar_asym_log(20, 30)) - 1.0) <= 0.05


def test_bivar_smallest_input_finite():
    assert math.isfinite(bivar_asym_log(1, 1))


def test_bivar_tracks_exact_count():
    log_exact = log_of_count(poly_bernoulli(30, 30))
    estimate = diag_asym_log(30, 1)
    assert abs(math.exp(log_exact - estimate) - 1.0) < 0.03


def test_diag_orders():
    assert diag_asym_log(30, 1) == pytest.approx(169.99149075031409, rel=1e-14)
    assert diag_asym_log(30, 2) == pytest.approx(169.97043064359124, rel=1e-14)
    with pytest.raises(ValueError):
        diag_asym_log(30, 3)


def test_diag_k1_closed_form():
    expected = math.log(
        math.sqrt(1.0 / (math.pi * (1.0 - LOG2))) * (1.0 / LOG2) ** 3
    )
    assert diag_asym_log(1, 1) == pytest.approx(expected, rel=1e-13)


def test_diag_order2_is_closer():
    for k in range(10, 61):
        log_exact = log_of_count(poly_bernoulli(k, k))
        err1 = abs(log_exact - diag_asym_log(k, 1))
        err2 = abs(log_exact - diag_asym_log(k, 2))
        assert err2 < err1


def test_diag_ratio_constant_at_50():
    log_exact = log_of_count(poly_bernoulli(50, 50))
    ratio = math.exp(log_exact - diag_asym_log(50, 1))
    assert abs((ratio - 1.0) * 50 - DIAG_RATIO_C) <= 0.1 * abs(DIAG_RATIO_C)


def test_d_diag_shift():
    assert d_diag_asym_log(30) == pytest.approx(
        diag_asym_log(30, 1) - math.log(4.0), rel=1e-15
    )
    assert d_diag_asym_log(30) == pytest.approx(168.6051963891942, rel=1e-14)


def test_d_diag_tracks_exact_count():
    log_exact = log_of_count(ml_degree(20, 20))
    assert abs(math.exp(log_exact - d_diag_asym_log(20)) - 1.0) <= 0.1
    assert math.isfinite(d_diag_asym_log(1))


def test_ml_log_frozen_value():
    assert ml_asym_log(10, 12) == pytest.approx(40.65377148216483, rel=1e-14)


def test_ml_is_bivar_shifted_by_saddle():
    sp = saddle_point(10, 12)
    assert ml_asym_log(10, 12) == pytest.approx(
        bivar_asym_log(10, 12) - sp.a - sp.b, abs=1e-12
    )


def test_ml_tracks_exact_count():
    log_exact = log_of_count(ml_degree(40, 40))
    assert abs(math.exp(log_exact - ml_asym_log(40, 40)) - 1.0) < 0.03


def test_ml_off_diagonal_accuracy():
    log_exact = log_of_count(ml_degree(20, 30))
    assert abs(math.exp(log_exact - ml_asym_log(20, 30)) - 1.0) <= 0.05
    assert math.isfinite(ml_asym_log(1, 1))


def test_excedance_estimator():
    assert excedance_asym_log(40, 60) == pytest.approx(326.35169600154836, rel=1e-14)
    log_exact = log_of_count(c_relative(40, 60))
    assert abs(math.exp(log_exact - excedance_asym_log(40, 60)) - 1.0) < 0.01


def test_excedance_diagonal_relation():
    assert excedance_asym_log(5, 5) == pytest.approx(
        bivar_asym_log(5, 5) - LOG2, abs=1e-12
    )
    assert math.isfinite(excedance_asym_log(1, 1))


def test_excedance_error_shrinks_with_size():
    def rel_error(r, s):
        log_exact = log_of_count(c_relative(r, s))
        return abs(math.exp(log_exact - excedance_asym_log(r, s)) - 1.0)

    assert rel_error(5, 5) < rel_error(3, 3)


def test_acsv_reproduces_closed_forms():
    for n in range(1, 31):
        for k in range(1, 31):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", CompactnessWarning)
                assert abs(
                    acsv_general_log(POLY_BERNOULLI_GF, n, k) - bivar_asym_log(n, k)
                ) <= 1e-9
                assert abs(
                    acsv_general_log(ML_DEGREE_GF, n, k) - ml_asym_log(n, k)
                ) <= 1e-9


def test_acsv_ml_diagonal_is_corrected_form():
    for k in (5, 15, 30):
        assert acsv_general_log(ML_DEGREE_GF, k, k) == pytest.approx(
            d_diag_asym_log(k), abs=1e-10
        )


def test_acsv_frozen_values():
    assert acsv_general_log(POLY_BERNOULLI_GF, 10, 12) == pytest.approx(
        42.08249346629643, rel=1e-14
    )
    assert acsv_general_log(ML_DEGREE_GF, 10, 12) == pytest.approx(
        40.65377148216483, rel=1e-14
    )


def test_estimators_reject_nonpositive_indices():
    with pytest.raises(ValueError):
        bivar_asym_log(0, 5)
    with pytest.raises(ValueError):
        ml_asym_log(5, 0)
    with pytest.raises(ValueError):
        excedance_asym_log(-1, 3)
    with pytest.raises(ValueError):
        diag_asym_log(0, 1)


def test_compactness_warning_fires_off_cone():
    with pytest.warns(CompactnessWarning):
        bivar_asym_log(1, 50)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        bivar_asym_log(10, 12)
