from fractions import Fraction

import pytest
import sympy

from berncert.numeric import Tri, padic_from_rational, valuation_at_least
from berncert.zeta import BoundStatus, check_bounds, estimate_coeffs, residue_rep, tail_bound
from oracles import bernoulli_big


def rational_interpolant(p, k, d):
    """Exact rational solve of the Vandermonde system (no p-adic arithmetic)."""
    n0 = residue_rep(k, p)
    nodes = [n0 + j * (p - 1) for j in range(d + 1)]
    V = sympy.Matrix([[n**i for i in range(d + 1)] for n in nodes])
    y = sympy.Matrix([sympy.Rational(str((1 - Fraction(p) ** (n - 1)) * bernoulli_big(n))) for n in nodes])
    sol = V.LUsolve(y)
    return [Fraction(int(c.p), int(c.q)) for c in sol]


@pytest.mark.parametrize("k,p,expected", [(2, 5, 2), (0, 7, 6), (-2, 11, 8)])
def test_residue_rep(k, p, expected):
    assert residue_rep(k, p) == expected


def test_residue_rep_odd_class():
    with pytest.raises(ValueError):
        residue_rep(3, 7)


def test_a0_on_zero_class():
    est = estimate_coeffs(5, 0, 3)
    assert est.certified_prec == tail_bound(5, 3) == 1
    a0 = est.certified(0)
    assert a0.known_valuation() == -1
    assert a0 == padic_from_rational(Fraction(4, 5), 5, est.certified_prec)


def test_reproduces_first_sample():
    est = estimate_coeffs(7, 2, 4)
    y0 = est.evaluate(2)
    assert y0.contains(-1)
    assert (1 - 7) * Fraction(1, 6) == -1


def test_a3_at_13():
    est = estimate_coeffs(13, 2, 8)
    assert est.certified_prec > 2
    assert valuation_at_least(est.certified(3), 2) is Tri.YES


@pytest.mark.parametrize("p,k,d", [(5, 2, 3), (7, 0, 5), (11, 4, 6), (13, 10, 11)])
def test_interpolation_consistency(p, k, d):
    est = estimate_coeffs(p, k, d)
    for n, y in est.samples:
        assert est.evaluate(n) == y


@pytest.mark.parametrize("p,k,d", [(7, 2, 5), (11, 0, 9), (13, 6, 8)])
def test_matches_rational_solve(p, k, d):
    est = estimate_coeffs(p, k, d)
    exact = rational_interpolant(p, k, d)
    for i, c in enumerate(exact):
        assert est.coeffs[i].contains(c)


@pytest.mark.parametrize("p,k", [(7, 2), (11, 0), (13, 4)])
def test_stability_in_degree(p, k):
    prev = None
    for d in range(1, p - 1):
        est = estimate_coeffs(p, k, d)
        if prev is not None:
            cp = min(prev.certified_prec, est.certified_prec)
            for i in range(prev.degree + 1):
                diff = (est.coeffs[i] - prev.coeffs[i]).with_prec(cp)
                assert valuation_at_least(diff, cp) is Tri.YES
        prev = est


def test_degree_limit():
    with pytest.raises(ValueError):
        estimate_coeffs(7, 2, 6)


def test_statement_one_at_7():
    rep = check_bounds(7, 4)
    ones = [c for c in rep.checks if c.statement == "1"]
    assert sorted(c.k for c in ones) == [0, 2, 4]
    assert all(c.status is BoundStatus.PASS for c in ones)


def test_statement_three_at_11():
    rep = check_bounds(11, 7)
    threes = [c for c in rep.checks if c.statement == "3" and c.i <= 3]
    assert len(threes) == 4 * 5
    assert all(c.status is BoundStatus.PASS for c in threes)


def test_a1_identity_at_13():
    rep = check_bounds(13, 8)
    ids = [c for c in rep.checks if c.statement == "a1-identity"]
    assert len(ids) == 6 and all(c.status is BoundStatus.PASS for c in ids)


def test_untestable_reported_not_passed():
    rep = check_bounds(7, 4)
    est = rep.estimates[2]
    for c in rep.checks:
        if c.statement == "3" and c.i - 1 >= est.certified_prec:
            assert c.status is BoundStatus.UNTESTABLE
    assert rep.by_status(BoundStatus.UNTESTABLE)
