from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berncert.numeric import (
    INF,
    PadicApprox,
    Tri,
    padic_add,
    padic_from_rational,
    padic_mul,
    valuation_at_least,
    vp_rational,
)

PRIMES = [3, 5, 7, 11, 13]


def rationals_with_p_powers():
    return st.builds(
        lambda q, e, p: (q * Fraction(p) ** e, p),
        st.fractions(max_denominator=10**4).filter(lambda q: q != 0),
        st.integers(-3, 4),
        st.sampled_from(PRIMES),
    )


class TestVpRational:
    def test_bernoulli_12_at_5(self):
        assert vp_rational(Fraction(-691, 2730), 5) == -1

    def test_zero_is_infinite(self):
        assert vp_rational(0, 7) == INF

    def test_fifty_thirds(self):
        assert vp_rational(Fraction(50, 3), 5) == 2

    @pytest.mark.parametrize("bad", [1, 4, 9, 0, -5])
    def test_rejects_non_primes(self, bad):
        with pytest.raises(ValueError):
            vp_rational(Fraction(1, 2), bad)

    @given(st.fractions().filter(bool), st.fractions().filter(bool), st.sampled_from(PRIMES))
    def test_multiplicative(self, x, y, p):
        assert vp_rational(x * y, p) == vp_rational(x, p) + vp_rational(y, p)


class TestFromRational:
    def test_one_sixth(self):
        x = padic_from_rational(Fraction(1, 6), 5, 2)
        assert (x.v_min, x.r, x.prec_abs) == (0, 21, 2)

    def test_zero(self):
        x = padic_from_rational(0, 7, 3)
        assert x.r == 0 and x.prec_abs == 3
        assert valuation_at_least(x, 3) is Tri.YES

    def test_b12_at_5(self):
        x = padic_from_rational(Fraction(-691, 2730), 5, 2)
        # independent: 2730 = 5 * 546, unit part -691/546 mod 5^3
        assert x.v_min == -1
        assert x.r == (-691 * pow(546, -1, 125)) % 125

    def test_high_valuation_gives_zero_class(self):
        x = padic_from_rational(Fraction(125, 2), 5, 2)
        assert x.is_zero and x.contains(Fraction(125, 2))

    @given(rationals_with_p_powers(), st.integers(1, 6))
    def test_reconstruction(self, qp, extra):
        q, p = qp
        v = vp_rational(q, p)
        x = padic_from_rational(q, p, v + extra)
        assert x.known_valuation() == v
        assert x.contains(q)
        # leading digit of the unit part matches q / p^v mod p
        unit = q / Fraction(p) ** v
        assert x.r % p == unit.numerator * pow(unit.denominator, -1, p) % p


class TestArithmetic:
    def test_sum_to_one(self):
        a = padic_from_rational(Fraction(1, 6), 5, 2)
        b = padic_from_rational(Fraction(5, 6), 5, 2)
        s = padic_add(a, b)
        assert s == padic_from_rational(1, 5, 2)

    def test_absorbing_zero(self):
        x = padic_from_rational(Fraction(7, 3), 5, 3)
        z = PadicApprox.zero(5, 3)
        assert padic_mul(x, z).r == 0

    def test_mixed_precision_sum(self):
        a = padic_from_rational(Fraction(1, 5), 5, 2)
        b = padic_from_rational(1, 5, 3)
        s = a + b
        assert a.v_min == -1
        assert s.prec_abs == 2
        # containment by sampling members of each class
        for i in range(-4, 5):
            for j in range(-4, 5):
                x = Fraction(1, 5) + i * 25
                y = 1 + j * 125 + Fraction(125, 7) * j
                assert s.contains(x + y)

    def test_mismatched_primes(self):
        with pytest.raises(ValueError):
            padic_from_rational(1, 5, 2) + padic_from_rational(1, 7, 2)

    @settings(max_examples=300)
    @given(
        st.fractions(max_denominator=500),
        st.fractions(max_denominator=500),
        st.sampled_from(PRIMES),
        st.integers(1, 5),
        st.integers(1, 5),
        st.integers(-20, 20),
        st.integers(-20, 20),
    )
    def test_containment(self, x, y, p, pa, pb, i, j):
        a = padic_from_rational(x, p, pa)
        b = padic_from_rational(y, p, pb)
        # perturb inside each class
        x2 = x + i * Fraction(p) ** pa
        y2 = y + j * Fraction(p) ** pb
        assert (a + b).contains(x2 + y2)
        assert (a - b).contains(x2 - y2)
        assert (a * b).contains(x2 * y2)
        prod = a * b
        assert prod.prec_abs >= min(a.valuation_lower_bound() + pb, b.valuation_lower_bound() + pa)

    @given(st.fractions(max_denominator=500).filter(bool), st.sampled_from(PRIMES), st.integers(1, 6))
    def test_inverse(self, x, p, prec):
        v = vp_rational(x, p)
        a = padic_from_rational(x, p, v + prec)
        assert a.inverse().contains(1 / x)
        assert (a / a).contains(1)


class TestValuationAtLeast:
    def test_yes(self):
        x = PadicApprox.from_parts(5, 25 * 3, 0, 4)
        assert valuation_at_least(x, 2) is Tri.YES

    def test_no(self):
        x = PadicApprox.from_parts(5, 5 * 3, 0, 4)
        assert valuation_at_least(x, 2) is Tri.NO

    def test_indeterminate(self):
        assert valuation_at_least(PadicApprox.zero(5, 2), 3) is Tri.INDETERMINATE

    def test_invalid_construction(self):
        with pytest.raises(ValueError):
            PadicApprox(5, 2, 1, 2)
