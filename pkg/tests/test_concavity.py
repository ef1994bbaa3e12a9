from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lclab import arith
from lclab.concavity import (
    MAX_WINDOW,
    c_vertical_check,
    first_failure_table,
    first_vertical_failure,
    hong_zhang_coefficients,
    hong_zhang_scan,
    horizontal_check,
    hz_equivalence_check,
    is_logconcave,
    stirling_column_failures,
    stirling_column_first_failure,
    vertical_check,
    window_top,
)
from lclab.stirling import delta
from lclab.triangles import build_triangle


def test_is_logconcave_basics():
    assert is_logconcave([1, 3, 3, 1]) is None
    assert is_logconcave([1, 1, 2]) == 1
    assert is_logconcave([]) is None
    assert is_logconcave([5]) is None
    assert is_logconcave([1, 0, 1]) == 1  # an interior zero between positives fails
    assert is_logconcave([0, 0, 3, 5, 3, 0]) is None  # leading zeros are safe
    with pytest.raises(ValueError):
        is_logconcave([1, -2, 1])


def test_is_logconcave_takes_fractions():
    assert is_logconcave([arith.harmonic(n) for n in range(1, 101)]) is None
    assert is_logconcave([Fraction(1, 2), Fraction(1, 2), Fraction(2)]) == 1


def test_horizontal_binomials_pass():
    report = horizontal_check(build_triangle(arith.one(), "one", 20))
    assert report.passed
    assert report.mode == "horizontal"


def test_horizontal_stirling_rows_pass():
    report = horizontal_check(build_triangle(arith.one(), "id", 40))
    assert report.passed


def test_horizontal_needs_full_rows():
    lim = build_triangle(arith.sigma(), "id", 10, m_max=2)
    with pytest.raises(ValueError):
        horizontal_check(lim)


def test_vertical_first_column_of_stirling_family_fails_everywhere():
    tri = build_triangle(arith.one(), "id", 10)
    report = vertical_check(tri, 1, 1)
    assert not report.passed
    assert report.failures == [(n, 1) for n in range(2, 10)]


def test_vertical_second_column_first_failure():
    tri = build_triangle(arith.one(), "id", 20)
    assert first_vertical_failure(tri, 1) == 2
    assert first_vertical_failure(tri, 2) == 5
    assert first_vertical_failure(tri, 3) == 17
    assert first_vertical_failure(tri, 3, n_limit=10) is None


def test_vertical_binomials_pass():
    tri = build_triangle(arith.one(), "one", 40)
    report = vertical_check(tri, 2, 8)
    assert report.passed
    # column m = 1 is constant, so it passes with equality annotations
    flat = vertical_check(tri, 1, 1)
    assert flat.passed
    assert flat.equalities


def test_vertical_clipping_flag():
    tri = build_triangle(arith.sigma(), "id", 10)
    assert vertical_check(tri, 1, 2, n_to=9).clipped is False
    assert vertical_check(tri, 1, 2, n_to=50).clipped is True


def test_no_failures_below_column_index():
    # structural zeros at n < m never produce failures
    tri = build_triangle(arith.sigma(), "id", 30)
    report = vertical_check(tri)
    assert all(n >= m for n, m in report.failures)


def test_window_top_exact():
    assert window_top(Fraction(3, 2), 4) == 5  # floor(81/16)
    assert window_top(Fraction(2), 10) == 1024
    assert window_top(Fraction(1, 2), 3) == 0
    with pytest.raises(ValueError):
        window_top(Fraction(-1), 2)


def test_c_vertical_boundary_failure_visible():
    tri = build_triangle(arith.one(), "id", 129)
    report = c_vertical_check(tri, 2, 7, include_m1=True)
    assert report.failures == [(2, 1)]
    assert report.boundary == [(2, 1)]
    default = c_vertical_check(tri, 2, 7)
    assert default.passed


def test_c_vertical_clipping():
    tri = build_triangle(arith.one(), "id", 10)
    report = c_vertical_check(tri, 2, 5)
    assert report.clipped


def test_first_failure_table_small():
    assert first_failure_table(4, 60) == [2, 5, 17, 54]
    assert first_failure_table(2, 3) == [2, None]


def test_stirling_column_failure_scans():
    assert stirling_column_first_failure(1, 50) == 2
    assert stirling_column_first_failure(2, 50) == 5
    assert stirling_column_failures(1, 30) == list(range(2, 31))
    assert stirling_column_failures(2, 60) == list(range(5, 61))


def test_stirling_scan_matches_triangle_scan():
    tri = build_triangle(arith.one(), "id", 60)
    for m in (1, 2, 3):
        assert first_vertical_failure(tri, m) == stirling_column_first_failure(m, 59)


def test_delta_sign_decides_second_column():
    table_failures = set(stirling_column_failures(2, 120))
    for n in range(2, 121):
        if delta(n) > 0:
            assert n not in table_failures
        elif delta(n) < 0:
            assert n in table_failures


def test_hong_zhang_coefficients_small():
    b1 = hong_zhang_coefficients(1, 6)
    assert b1[1:] == [Fraction(arith.sigma()(n), n) for n in range(1, 7)]
    b2 = hong_zhang_coefficients(2, 6)
    assert b2[2] == 1
    assert b2[4] == Fraction(59, 12)
    assert b2[0] == 0 and b2[1] == 0


def test_hz_zero_below_power():
    for m in range(2, 6):
        b = hong_zhang_coefficients(m, 12)
        assert all(b[n] == 0 for n in range(m))
        assert all(b[n] > 0 for n in range(m, 13))


def test_hz_equivalence():
    assert hz_equivalence_check(6, 16).passed


def test_hong_zhang_scan_passes():
    report = hong_zhang_scan(2, 6)
    assert report.passed
    assert report.mode == "hong-zhang"
    assert not report.clipped
    with_first = hong_zhang_scan(2, 4, include_m1=True)
    assert with_first.passed


def test_hong_zhang_window_guard():
    assert window_top(Fraction(2), 13) > MAX_WINDOW
    with pytest.raises(ValueError):
        hong_zhang_scan(2, 13)


def test_scale_invariance_of_vertical_verdicts():
    # the geometric twin differs column-by-column by the constant m!,
    # so every verdict must agree
    for make in (arith.sigma, arith.square):
        exp_tri = build_triangle(make(), "id", 25)
        geo_tri = build_triangle(arith.tilde(make()), "one", 25)
        exp_report = vertical_check(exp_tri)
        geo_report = vertical_check(geo_tri)
        assert exp_report.failures == geo_report.failures


@given(st.lists(st.integers(min_value=0, max_value=40), min_size=0, max_size=12))
def test_zero_extension_never_flags_edges(body):
    # explicit zero padding agrees with the implicit zero extension, so
    # padding can neither hide nor invent a failure
    base = is_logconcave(body)
    padded = is_logconcave([0, 0] + body + [0])
    if base is None:
        assert padded is None
    else:
        assert padded == base + 2
