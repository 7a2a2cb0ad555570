"""Exact-rational bound machinery: Bernoulli numbers, polynomials, roots."""

import math
from fractions import Fraction

import pytest

from burngames.bounds import (
    Polynomial,
    bernoulli,
    classical_bounds,
    cube3_bound,
    g_bar,
    kings_bound,
    kings_root_closed_form,
    largest_root,
    non_square_check,
    q_poly,
)

F = Fraction

KNOWN_BERNOULLI = [
    F(1),
    F(1, 2),
    F(1, 6),
    F(0),
    F(-1, 30),
    F(0),
    F(1, 42),
    F(0),
    F(-1, 30),
    F(0),
    F(5, 66),
]


class TestBernoulli:
    def test_known_values(self):
        assert list(bernoulli(10)) == KNOWN_BERNOULLI

    def test_plus_half_convention(self):
        assert bernoulli(1)[1] == F(1, 2)

    def test_odd_vanish(self):
        table = bernoulli(41)
        assert all(table[j] == 0 for j in range(3, 42, 2))

    def test_todd_series_identity(self):
        # td(z) * (1 - e^{-z})/z = 1, coefficient by coefficient:
        # sum_j B_j/j! * (-1)^(m-j)/(m-j+1)! must vanish for m >= 1.
        table = bernoulli(25)
        for m in range(0, 26):
            total = sum(
                table[j]
                / math.factorial(j)
                * F((-1) ** (m - j), math.factorial(m - j + 1))
                for j in range(m + 1)
            )
            assert total == (1 if m == 0 else 0)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            bernoulli(-1)


class TestPolynomial:
    def test_arithmetic(self):
        x = Polynomial([0, 1])
        p = (2 * x - 1) ** 2
        assert p.coeffs == (F(1), F(-4), F(4))
        assert p(F(3, 2)) == 4

    def test_normalization(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (F(1), F(2))
        assert Polynomial([0]).degree == -1

    def test_derivative(self):
        p = Polynomial([5, 0, -1, 2])  # 5 - x^2 + 2x^3
        assert p.derivative().coeffs == (F(0), F(-2), F(6))


class TestGBar:
    def test_closed_form_d1(self):
        assert g_bar(1).coeffs == (F(0), F(0), F(1))  # x^2

    def test_closed_form_d2(self):
        # x(2x-1)(2x+1)/3 = (4x^3 - x)/3
        assert g_bar(2).coeffs == (F(0), F(-1, 3), F(0), F(4, 3))

    def test_closed_form_d3(self):
        assert g_bar(3).coeffs == (F(0), F(0), F(-1), F(0), F(2))  # 2x^4 - x^2

    @pytest.mark.parametrize("d", range(1, 7))
    def test_matches_odd_power_sums(self, d):
        poly = g_bar(d)
        running = 0
        for m in range(1, 60):
            running += (2 * m - 1) ** d
            assert poly(m) == running

    @pytest.mark.parametrize("d", range(1, 9))
    def test_strictly_increasing(self, d):
        deriv = g_bar(d).derivative()
        samples = [F(1), F(3, 2), F(2), F(7, 3), F(5), F(10), F(99, 7)]
        assert all(deriv(x) > 0 for x in samples)
        values = [g_bar(d)(F(k, 4)) for k in range(4, 60)]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestQPoly:
    def test_q31(self):
        assert q_poly(3, 1).coeffs == (F(3), F(0), F(-1))

    def test_exact_rational_root(self):
        assert q_poly(2, 2)(F(3, 2)) == 0

    def test_sharp_path_root(self):
        result = largest_root(q_poly(9, 1))
        assert result.is_integral and result.floor_x_star == 3


class TestLargestRoot:
    def test_exact_half_integer(self):
        result = largest_root(q_poly(2, 2))
        assert result.lo == result.hi == F(3, 2)
        assert not result.is_integral
        assert result.floor_x_star == 1

    def test_king3_bracket(self):
        result = largest_root(q_poly(3, 2))
        # root of 4x^3 - x = 27
        assert F(19339, 10000) < result.lo <= result.hi < F(19340, 10000)
        assert result.floor_x_star == 1 and not result.is_integral

    def test_bracket_sign_invariant(self):
        for n, d in [(5, 1), (7, 2), (4, 3), (9, 4)]:
            p = q_poly(n, d)
            r = largest_root(p)
            assert p(r.lo) >= 0 >= p(r.hi)
            assert r.hi - r.lo <= F(1, 10**12)

    @pytest.mark.parametrize("n", range(1, 150))
    def test_d1_is_integer_square_root(self, n):
        r = largest_root(q_poly(n, 1))
        assert r.floor_x_star == math.isqrt(n)
        assert r.is_integral == (math.isqrt(n) ** 2 == n)

    def test_n1_root_is_one(self):
        r = largest_root(q_poly(1, 3))
        assert r.is_integral and r.floor_x_star == 1

    def test_no_bracket(self):
        with pytest.raises(ValueError, match="bracket"):
            largest_root(Polynomial([-1, 0, -1]))

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            largest_root(q_poly(4, 2), tolerance=2)


class TestKingsBound:
    def test_small_values(self):
        assert kings_bound(2) == 2
        assert kings_bound(3) == 2

    def test_rejects_n1(self):
        with pytest.raises(ValueError):
            kings_bound(1)

    @pytest.mark.parametrize("n", [2, 3, 10, 100, 1000, 10000])
    def test_closed_form_agrees_with_bisection(self, n):
        root = largest_root(q_poly(n, 2))
        closed = kings_root_closed_form(n)
        assert abs(closed - root.approx) <= 1e-9 + float(root.hi - root.lo)


class TestCube3Bound:
    def test_n1_integral(self):
        result = cube3_bound(1)
        assert result.bound == 1 and result.is_integral
        assert result.lo == result.hi == 1

    def test_n4(self):
        result = cube3_bound(4)
        assert result.bound == 2 and not result.is_integral
        assert abs(result.approx - 2.4315) < 1e-3

    def test_n2(self):
        result = cube3_bound(2)
        assert result.bound == 1
        assert abs(result.closed_form - 0.5 * math.sqrt(1 + math.sqrt(65))) < 1e-12

    @pytest.mark.parametrize("n", [2, 3, 10, 100, 1000])
    def test_closed_form_agrees(self, n):
        result = cube3_bound(n)
        assert abs(result.closed_form - result.approx) <= 1e-9 + float(result.hi - result.lo)


class TestNonSquare:
    def test_small_cases(self):
        assert non_square_check(2)  # 10 is not a square
        assert non_square_check(3)  # 35 is not a square

    def test_boundary_k1(self):
        # k = 1 gives 1, which is a square; the claim starts at k = 2
        assert non_square_check(1) is False

    def test_range_to_ten_thousand(self):
        assert all(non_square_check(k) for k in range(2, 10_001))


class TestClassicalBounds:
    def test_n9(self):
        assert classical_bounds(9, 4).land_bound == 4

    def test_n1_all_one(self):
        result = classical_bounds(1, 0)
        assert (result.land_bound, result.sqrt_bound, result.radius_bound) == (1, 1, 1)

    def test_perfect_square(self):
        assert classical_bounds(16, 3).sqrt_bound == 4

    def test_sqrt_rounds_up(self):
        assert classical_bounds(17, 3).sqrt_bound == 5
