from fractions import Fraction

import pytest
from sympy import primerange

from berncert.bernoulli import bernoulli_exact
from berncert.checker import CongruenceFamily, check_theorem
from berncert.expr import parse_expr
from berncert.numeric import padic_from_rational, vp_rational
from berncert.verifier import Status, defect, verify_prime, verify_range
from conftest import CERTIFIED_CORPUS
from oracles import exact_defect, vp


def fam(N, g0, terms):
    return CongruenceFamily.build(N, parse_expr(g0), [(parse_expr(f), parse_expr(g)) for f, g in terms])


VSC_PLUS = fam(1, "0", [("t+1", "t")])
VSC_MINUS = fam(1, "-1", [("t-1", "t")])
KUMMER_TERMS = [("t+1", "1/(t+1)"), ("t^2+1", "-1/(t^2+1)")]
KUMMER = fam(2, "0", KUMMER_TERMS)


def test_vsc_plus_at_7():
    assert 7 * bernoulli_exact(8) == Fraction(-7, 30)
    r = verify_prime(VSC_PLUS, 7)
    assert r.status is Status.PASS and r.observed_valuation == 1 and not r.at_least


def test_vsc_minus_at_5():
    assert 5 * bernoulli_exact(4) + 1 == Fraction(5, 6)
    r = verify_prime(VSC_MINUS, 5)
    assert r.status is Status.PASS and r.observed_valuation == 1


def test_kummer_at_5():
    exact = bernoulli_exact(6) / 6 - bernoulli_exact(26) / 26
    assert vp(exact, 5) >= 2
    r = verify_prime(KUMMER, 5)
    assert r.status is Status.PASS
    assert r.observed_valuation == min(vp(exact, 5), 4)


def test_kummer_n3_has_exact_valuation_two():
    # brute force over the primes where every index is small enough to be exact
    valuations = {p: vp(exact_defect(KUMMER_TERMS, "0", 3, p), p) for p in primerange(5, 14)}
    assert 2 in valuations.values()
    report = verify_range(KUMMER.with_N(3), 5, 50)
    fails = [r for r in report.prime_results if r.status is Status.FAIL]
    assert fails and any(r.observed_valuation == 2 and not r.at_least for r in fails)
    for r in report.prime_results:
        if r.p in valuations:
            assert r.observed_valuation == min(valuations[r.p], 5)


def test_pole_is_skipped():
    f = fam(1, "0", [("t+1", "1/(t-7)")])
    report = verify_range(f, 5, 11)
    by_p = {r.p: r for r in report.prime_results}
    assert by_p[7].status is Status.SKIPPED and "pole" in by_p[7].reason
    assert by_p[5].status is not Status.SKIPPED and by_p[11].status is not Status.SKIPPED
    assert report.summary["skipped"] == 1


def test_small_index_is_skipped():
    f = fam(1, "0", [("t-6", "1")])
    r = verify_prime(f, 5)
    assert r.status is Status.SKIPPED


def test_small_primes_skipped():
    assert verify_prime(VSC_PLUS, 3).status is Status.SKIPPED


def test_empty_range():
    report = verify_range(VSC_PLUS, 24, 28)
    assert report.prime_results == [] and report.ok


def test_defect_class_contains_exact_value():
    for name, (terms, g0, N) in {
        "kummer": (KUMMER_TERMS, "0", 2),
        "sun2": ([("3*t-1", "1/(3*t-1)"), ("2*t", "-3/(2*t)"), ("t+1", "3/(t+1)")], "(1-t)/12", 3),
    }.items():
        family = fam(N, g0, terms)
        for p in primerange(5, 14):
            exact = exact_defect(terms, g0, N, p)
            for prec in (N, N + 2):
                d = defect(family, p, prec)
                assert d.prec_abs >= prec
                assert d == padic_from_rational(exact, p, prec), (name, p)


@pytest.mark.parametrize("name", CERTIFIED_CORPUS)
def test_guard_independence(corpus, name):
    family = corpus[name]
    for p in primerange(5, 30):
        base = verify_prime(family, p, 1)
        for g in (2, 4):
            r = verify_prime(family, p, g)
            assert r.status is base.status
            if not base.at_least:
                assert r.observed_valuation == base.observed_valuation


def test_parallel_matches_serial(corpus):
    family = corpus["sun_s2_k3_b2"]
    a = verify_range(family, 5, 60, jobs=1)
    b = verify_range(family, 5, 60, jobs=3)
    assert a.prime_results == b.prime_results


def test_negative_valuation_weight_boost():
    # g = 1/t^2 forces the Bernoulli precision up by 2
    f = fam(0, "0", [("t+1", "1/t^2")])
    r = verify_prime(f, 7)
    assert r.status is Status.FAIL
    assert r.observed_valuation == vp_rational(bernoulli_exact(8) / 49, 7)
