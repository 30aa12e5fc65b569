import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import primerange

from berncert.expr import parse_expr
from berncert.numeric import INF, vp_rational
from berncert.ratfunc import (
    PoleError,
    Polynomial,
    RationalFunction,
    evaluate,
    exceptional_primes,
    integer_normal_form,
    poly_gcd,
    vt,
)
from strategies import polynomials, random_rational_function, rational_functions

t = RationalFunction.t()


class TestArithmetic:
    def test_difference(self):
        assert (t + 1) - (t**2 + 1) == t - t**2

    def test_cancellation(self):
        assert (1 / (t + 1)) * (t + 1) == RationalFunction.constant(1)

    def test_square(self):
        assert (3 * t - 1) ** 2 == 9 * t**2 - 6 * t + 1

    def test_negative_power(self):
        assert (t + 2) ** -2 == 1 / ((t + 2) * (t + 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            t / RationalFunction.constant(0)

    def test_canonical_denominator_is_monic(self):
        g = (t + 2) / (2 * t - 1)
        assert g.den.lead == 1
        assert g == (2 * t + 4) / (4 * t - 2)

    @given(rational_functions(), rational_functions(), rational_functions())
    def test_field_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if b:
            assert (a / b) * b == a

    @given(polynomials(), polynomials(nonzero=True))
    def test_divmod(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_gcd(self):
        a = Polynomial([-1, 0, 1])  # t^2 - 1
        b = Polynomial([1, 2, 1])  # (t + 1)^2
        assert poly_gcd(a, b) == Polynomial([1, 1])


class TestVt:
    def test_polynomial(self):
        assert vt(t**3 - 2 * t**2) == 2

    def test_negative(self):
        assert vt((t**2 + t) / t**3) == -2

    def test_zero(self):
        assert vt(RationalFunction.constant(0)) == INF

    @given(rational_functions(), rational_functions())
    def test_valuation_rules(self, g, h):
        assert vt(g * h) == vt(g) + vt(h) or (not g or not h)
        s = vt(g + h)
        assert s >= min(vt(g), vt(h))
        if vt(g) != vt(h):
            assert s == min(vt(g), vt(h))


class TestEvaluate:
    def test_value(self):
        assert evaluate(t**2 + 1, 5) == 26

    def test_pole(self):
        with pytest.raises(PoleError):
            evaluate(1 / (t - 1), 1)

    def test_rational_coefficients(self):
        assert evaluate(parse_expr("-(1-t)/6"), 7) == 1

    @given(rational_functions(), st.integers(-30, 30))
    def test_homomorphism(self, g, m):
        assume(g.den(m) != 0)
        h = g * (t + 1)
        assert evaluate(h, m) == evaluate(g, m) * (m + 1)


class TestExceptionalPrimes:
    def test_constant_over_t(self):
        g = 5 / t
        assert exceptional_primes(g) == {5}
        # at p = 5 the prediction v_5 = -1 fails: 5/5 = 1
        assert vp_rational(evaluate(g, 5), 5) == 0 != vt(g)

    def test_mobius(self):
        assert exceptional_primes((t + 2) / (2 * t - 1)) == {2}

    def test_none(self):
        assert exceptional_primes(t**2 * (t + 1)) == frozenset()

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            exceptional_primes(RationalFunction.constant(0))

    @given(rational_functions())
    def test_normal_form_reconstructs(self, g):
        assume(g)
        v, a, b = integer_normal_form(g)
        assert a.is_integral() and b.is_integral()
        assert a.coeffs[0] != 0 and b.coeffs[0] != 0
        assert RationalFunction(a, b) * t**v == g

    @settings(max_examples=50, deadline=None)
    @given(rational_functions())
    def test_valuation_transfer(self, g):
        assume(g)
        bad = exceptional_primes(g)
        for p in primerange(max(bad | {1}) + 1, 120):
            assert vp_rational(evaluate(g, p), p) == vt(g)


def test_random_seeded_transfer():
    rng = random.Random(3)
    for _ in range(20):
        g = random_rational_function(rng)
        bad = exceptional_primes(g)
        for p in primerange(max(bad | {1}) + 1, 100):
            assert vp_rational(evaluate(g, p), p) == vt(g)
