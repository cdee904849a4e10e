import math
import random
from fractions import Fraction

import pytest

from pbp.algebraic import (
    AlgebraicReal,
    RealCyclotomicField,
    cos_pi_over_minpoly,
    cyclotomic,
    poly_eval,
    poly_negate_variable,
    two_cos_minpoly,
)


def test_cyclotomic_small():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(10) == (1, -1, 1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(3, 40))
def test_two_cos_minpoly_has_the_right_root(n):
    poly = two_cos_minpoly(n)
    x = 2 * math.cos(2 * math.pi / n)
    assert abs(poly_eval(poly, x)) < 1e-7
    # degree phi(n)/2
    phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    assert len(poly) - 1 == phi // 2


def test_cos_pi_over_5_minpoly():
    # numeric root isolation confirms 4x^2 - 2x - 1 vanishes at cos(pi/5)
    poly = cos_pi_over_minpoly(5)
    assert poly == (-1, -2, 4)
    assert abs(poly_eval(poly, math.cos(math.pi / 5))) < 1e-12
    neg = poly_negate_variable(poly)
    assert neg == (-1, 2, 4)
    assert abs(poly_eval(neg, -math.cos(math.pi / 5))) < 1e-12


def test_rational_special_values():
    assert cos_pi_over_minpoly(2) == (0, 1)  # cos(pi/2) = 0
    assert cos_pi_over_minpoly(3) == (-1, 2)  # cos(pi/3) = 1/2
    assert cos_pi_over_minpoly(1) == (1, 1)  # cos(pi) = -1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 12, 15, 30])
def test_field_arithmetic_matches_floats(n):
    rng = random.Random(n)
    field = RealCyclotomicField(n)
    theta_f = 2 * math.cos(math.pi / n)

    def rand_elem():
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(field.degree)]
        return field.element(coeffs)

    def to_float(e):
        return float(e)

    for _ in range(25):
        a, b = rand_elem(), rand_elem()
        assert math.isclose(to_float(a + b), to_float(a) + to_float(b), abs_tol=1e-9)
        assert math.isclose(to_float(a * b), to_float(a) * to_float(b), abs_tol=1e-9)
        if not a.is_zero():
            assert math.isclose(to_float(a * a.inverse()), 1.0, abs_tol=1e-9)
        sgn = a.sign()
        val = to_float(a)
        if abs(val) > 1e-9:
            assert sgn == (1 if val > 0 else -1)
    assert math.isclose(float(field.theta()), theta_f, abs_tol=1e-9)


def test_two_cos_pi_over_divisors():
    field = RealCyclotomicField(30)
    for m in (2, 3, 5, 6, 10, 15, 30):
        elem = field.two_cos_pi_over(m)
        assert math.isclose(float(elem), 2 * math.cos(math.pi / m), abs_tol=1e-9)
    with pytest.raises(ValueError):
        field.two_cos_pi_over(7)


def test_exact_zero_detection():
    field = RealCyclotomicField(5)
    g = field.two_cos_pi_over(5)  # golden ratio, satisfies x^2 = x + 1
    assert (g * g - g - 1).is_zero()
    assert (g * g - g).sign() == 1


def test_algebraic_real_views():
    half = AlgebraicReal.from_rational(Fraction(1, 2))
    assert half.sign() == 1
    assert float(half) == 0.5

    zero = AlgebraicReal.from_rational(0)
    assert zero.sign() == 0

    root = AlgebraicReal.from_poly_near((-1, -2, 4), math.cos(math.pi / 5))
    assert root.sign() == 1
    assert math.isclose(float(root), math.cos(math.pi / 5), abs_tol=1e-12)
    narrowed = root.refine(Fraction(1, 10**9))
    assert narrowed.hi - narrowed.lo <= Fraction(1, 10**9)
    assert narrowed.lo < Fraction(root_float := float(root)).limit_denominator() < narrowed.hi


def test_sqrt2_times_itself():
    field = RealCyclotomicField(4)
    r = field.theta()  # sqrt(2)
    assert (r * r).as_rational() == 2
    assert (r - 1).sign() == 1
    assert (r - 2).sign() == -1
