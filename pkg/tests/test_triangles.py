import math
from fractions import Fraction

import pytest

from lclab import arith
from lclab.triangles import (
    Poly,
    build_triangle,
    check_conversion,
    closed_form_oracle,
    closed_forms_check,
    convert,
    euler_product_crosscheck,
    genfun_crosscheck,
)


def test_poly_basics():
    p = Poly([0, 1, 2])
    assert p.degree == 2
    assert p(3) == 3 + 18
    assert p.coefficient(5) == 0
    assert Poly([1, 0, 0]) == Poly([1])
    assert Poly([]).coeffs == [0]


def test_seed_row():
    tri = build_triangle(arith.sigma(), "id", 0)
    assert tri.n_max == 0
    assert tri.scaled(0, 0) == 1
    assert tri.row_poly(0) == Poly([1])


def test_divisor_sum_family_small_rows():
    tri = build_triangle(arith.sigma(), "id", 4)
    assert tri.row_scaled(2) == [3, 1]
    assert tri.row_scaled(3) == [8, 9, 1]
    assert tri.row_scaled(4) == [42, 59, 18, 1]
    assert tri.row_values(2) == [Fraction(3, 2), Fraction(1, 2)]
    assert tri.row_values(4) == [
        Fraction(7, 4),
        Fraction(59, 24),
        Fraction(3, 4),
        Fraction(1, 24),
    ]
    # at x = 1 these rows sum to partition numbers
    assert tri.row_poly(3)(1) == 3
    assert tri.row_poly(4)(1) == 5


def test_one_id_integer_scaled_rows():
    tri = build_triangle(arith.one(), "id", 6)
    assert tri.row_scaled(5) == [24, 50, 35, 10, 1]
    assert tri.row_scaled(6) == [120, 274, 225, 85, 15, 1]


def test_boundary_entries():
    g = arith.sigma()
    tri = build_triangle(g, "id", 15)
    for n in range(1, 16):
        assert tri.value(n, 1) == Fraction(g(n), n)
        assert tri.scaled(n, n) == 1  # A(n, n) = 1/n! under the n! scale
    geo = build_triangle(g, "one", 12)
    for n in range(1, 13):
        assert geo.value(n, 1) == g(n)
        assert geo.value(n, n) == 1


def test_entries_integral_and_positive():
    for make, h in ((arith.one, "id"), (arith.identity, "id"), (arith.sigma, "id"),
                    (arith.identity, "one")):
        tri = build_triangle(make(), h, 12)
        for n in range(1, 13):
            for b in tri.row_scaled(n):
                assert isinstance(b, int)
                assert b > 0


def test_geometric_one_family_rows():
    # P_n(x) = x (x+1)^(n-1) for g = 1, h = 1
    tri = build_triangle(arith.one(), "one", 8)
    for n in range(1, 9):
        for x in (1, 2, Fraction(-1, 2)):
            assert tri.row_poly(n)(x) == x * (x + 1) ** (n - 1)


def test_outside_and_errors():
    tri = build_triangle(arith.sigma(), "id", 6)
    assert tri.scaled(4, 0) == 0
    assert tri.scaled(4, 5) == 0
    assert tri.value(3, 7) == 0
    with pytest.raises(IndexError):
        tri.scaled(7, 1)
    with pytest.raises(ValueError):
        build_triangle(arith.sigma(), "diag", 5)
    with pytest.raises(ValueError):
        build_triangle(arith.sigma(), "id", 5, m_max=0)


def test_column_limited_build_matches_full():
    full = build_triangle(arith.sigma(), "id", 25)
    lim = build_triangle(arith.sigma(), "id", 25, m_max=3)
    for n in range(1, 26):
        for m in range(1, min(n, 3) + 1):
            assert lim.scaled(n, m) == full.scaled(n, m)
    with pytest.raises(IndexError):
        lim.scaled(10, 4)
    with pytest.raises(ValueError):
        lim.row_poly(10)


def test_convert_small():
    tri = build_triangle(arith.sigma(), "id", 4)
    geo = convert(tri)
    assert geo.h == "one"
    assert geo.g.label == "tilde(sigma)"
    assert geo.row_scaled(2) == [Fraction(3, 2), 1]
    # m! A(n, m): row 4 of the scaled values over 4! times 1!, 2!, 3!, 4!
    assert geo.row_values(4) == [
        Fraction(7, 4),
        Fraction(59, 12),
        Fraction(9, 2),
        Fraction(1),
    ]
    with pytest.raises(ValueError):
        convert(geo)


def test_convert_id_family_gives_binomials():
    # g(n) = n normalizes to the constant 1, so the converted triangle
    # must be the plain binomial triangle
    mapped = convert(build_triangle(arith.identity(), "id", 10))
    for n in range(1, 11):
        for m in range(1, n + 1):
            assert mapped.value(n, m) == math.comb(n - 1, m - 1)


def test_check_conversion_families():
    for make in (arith.one, arith.identity, arith.square, arith.sigma):
        res = check_conversion(make(), 18)
        assert res.passed, res


def test_genfun_crosscheck_both_weights():
    assert genfun_crosscheck(arith.sigma(), "id", 12).passed
    assert genfun_crosscheck(arith.one(), "one", 12).passed
    assert genfun_crosscheck(arith.square(), "id", 10, xs=(Fraction(2, 3),)).passed


def test_euler_product_crosscheck_values():
    assert euler_product_crosscheck(arith.sigma(), 12, 1).passed
    assert euler_product_crosscheck(arith.one(), 12, Fraction(1, 2)).passed
    assert euler_product_crosscheck(arith.square(), 10, -2).passed


def test_closed_form_oracle_values():
    assert closed_form_oracle("one", "one", 6, 3) == 10
    assert closed_form_oracle("square", "id", 3, 2) == 2
    assert closed_form_oracle("one", "id", 6, 2) == Fraction(274, 720)
    assert closed_form_oracle("id", "one", 4, 2) == 10
    assert closed_form_oracle("tilde(one)", "one", 6, 2) == Fraction(137, 180)
    assert closed_form_oracle("id", "id", 5, 3) == Fraction(6, 6)


def test_closed_form_oracle_errors():
    with pytest.raises(ValueError):
        closed_form_oracle("one", "one", 3, 0)
    with pytest.raises(ValueError):
        closed_form_oracle("one", "one", 3, 4)
    with pytest.raises(ValueError):
        closed_form_oracle("sigma", "id", 3, 1)


def test_closed_forms_check_passes():
    res = closed_forms_check(15)
    assert res.passed
    assert res.checked == 6 * 15 * 16 // 2
