"""Symbolic certification of Bernoulli congruence families.

A family ``(N, g0, [(f_1, g_1), ..., (f_n, g_n)])`` asserts

    sum_i g_i(p) * B_{f_i(p)}  ==  g0(p)   (mod p^N)

for all large primes p.  :func:`check_theorem` tests a sufficient criterion
made of finitely many t-adic valuation inequalities.  A failed criterion
does not mean the congruence is false.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .bernoulli import bernoulli_exact
from .numeric import INF
from .ratfunc import Polynomial, RationalFunction, T, exceptional_primes

Valuation = Union[int, float]

SUFFICIENT_ONLY_NOTE = (
    "NOT_CERTIFIED means only that the sufficient criterion failed; "
    "it does not show the congruence is false."
)
M_NOTE = "M is the minimum of v_t over g0, g1, ..., gn (g0 included)."


class InvalidFamily(ValueError):
    pass


class Verdict(str, enum.Enum):
    CERTIFIED = "CERTIFIED"
    NOT_CERTIFIED = "NOT_CERTIFIED"


@dataclass(frozen=True)
class Term:
    f: Polynomial
    g: RationalFunction

    @property
    def f_at_1(self) -> int:
        return int(self.f(1))

    @property
    def f_rf(self) -> RationalFunction:
        return RationalFunction(self.f)


@dataclass(frozen=True)
class CongruenceFamily:
    N: int
    g0: RationalFunction
    terms: tuple[Term, ...] = ()
    name: str = ""
    description: str = ""

    def __post_init__(self):
        if not isinstance(self.N, int):
            raise InvalidFamily("N must be an integer")
        object.__setattr__(self, "terms", tuple(self.terms))
        for i, term in enumerate(self.terms, start=1):
            f = term.f
            if not f.is_integral():
                raise InvalidFamily(f"f_{i} must have integer coefficients")
            if f.degree < 1:
                raise InvalidFamily(
                    f"f_{i} is constant; move the term g_{i}*B_{{f_{i}}} into g0 instead"
                )
            if f.lead <= 0:
                raise InvalidFamily(f"f_{i} must have a positive leading coefficient")

    @classmethod
    def build(cls, N: int, g0, terms: Sequence[tuple], **meta) -> "CongruenceFamily":
        """Convenience constructor accepting polynomials/rational functions/constants."""
        built = []
        for f, g in terms:
            if isinstance(f, RationalFunction):
                if not f.is_polynomial:
                    raise InvalidFamily("f must be a polynomial")
                f = f.as_polynomial()
            built.append(Term(f, RationalFunction.coerce(g)))
        return cls(N, RationalFunction.coerce(g0), tuple(built), **meta)

    def scaled(self, c) -> "CongruenceFamily":
        c = Fraction(c)
        return CongruenceFamily(
            self.N, self.g0 * c, tuple(Term(t.f, t.g * c) for t in self.terms), self.name, self.description
        )

    def with_N(self, N: int) -> "CongruenceFamily":
        return CongruenceFamily(N, self.g0, self.terms, self.name, self.description)

    def classes(self) -> list[int]:
        return sorted({t.f_at_1 for t in self.terms})


@dataclass(frozen=True)
class Check:
    condition: int
    class_k: Optional[int]
    m: Optional[int]
    computed_vt: Valuation
    required: int
    expression: RationalFunction = field(compare=False, repr=False)

    @property
    def passed(self) -> bool:
        return self.computed_vt >= self.required


@dataclass
class ConditionReport:
    family: CongruenceFamily
    M: Valuation
    checks: list[Check]
    verdict: Verdict
    threshold_estimate: Optional[int] = None
    notes: tuple[str, ...] = (M_NOTE, SUFFICIENT_ONLY_NOTE)

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def min_valuation_M(family: CongruenceFamily) -> Valuation:
    """Minimum t-adic valuation over g0 and every g_i (inf if all vanish)."""
    return min([family.g0.vt()] + [t.g.vt() for t in family.terms])


def condition1_expression(family: CongruenceFamily) -> RationalFunction:
    expr = family.g0
    zero_class = RationalFunction.constant(0)
    for term in family.terms:
        k = term.f_at_1
        if k == 0:
            zero_class = zero_class + term.g
        elif k >= 2:
            b = bernoulli_exact(k)
            if b:
                expr = expr - (1 - T ** (k - 1)) * (b / k) * term.g * term.f_rf
    return expr - (1 - 1 / T) * zero_class


def condition2_sum(family: CongruenceFamily, k: int, m: int) -> RationalFunction:
    """Sum of ``g_i * f_i**m`` over terms with ``f_i(1) == k`` (k even, <= 0)."""
    acc = RationalFunction.constant(0)
    for term in family.terms:
        if term.f_at_1 == k:
            acc = acc + term.g * term.f_rf**m
    return acc


def condition3_sum(family: CongruenceFamily, k: int, m: int) -> RationalFunction:
    """Sum of ``g_i * (f_i**m - k**(m-1) * f_i)`` over terms with ``f_i(1) == k``."""
    acc = RationalFunction.constant(0)
    for term in family.terms:
        if term.f_at_1 == k:
            f = term.f_rf
            acc = acc + term.g * (f**m - k ** (m - 1) * f)
    return acc


def _m_upper(family: CongruenceFamily, M: Valuation) -> int:
    if M == INF:
        return 0
    return family.N - int(M)


def check_theorem(family: CongruenceFamily) -> ConditionReport:
    N = family.N
    M = min_valuation_M(family)
    top = _m_upper(family, M)
    checks = []

    e1 = condition1_expression(family)
    checks.append(Check(1, None, None, e1.vt(), N, e1))

    classes = family.classes()
    for k in classes:
        if k <= 0 and k % 2 == 0:
            for m in range(1, top + 1):
                s = condition2_sum(family, k, m)
                checks.append(Check(2, k, m, s.vt(), N + 1 - m, s))
    for k in classes:
        if k >= 2 and k % 2 == 0:
            for m in range(2, top + 1):
                s = condition3_sum(family, k, m)
                checks.append(Check(3, k, m, s.vt(), N + 1 - m, s))

    ok = all(c.passed for c in checks)
    report = ConditionReport(family, M, checks, Verdict.CERTIFIED if ok else Verdict.NOT_CERTIFIED)
    if ok:
        report.threshold_estimate = threshold_estimate(family, report)
    return report


def _least_p_for_indices(family: CongruenceFamily, M: Valuation) -> int:
    """Least p0 with f_i(p) >= 2 and f_i(p) - 1 + M >= N for every p >= p0."""
    need = 2 if M == INF else max(2, family.N + 1 - int(M))
    worst = 1
    for term in family.terms:
        shifted = term.f - Polynomial([need])
        lead = shifted.lead
        # Cauchy bound: no roots of f - need beyond this, and f is increasing to +inf
        bound = 1 + max(abs(c / lead) for c in shifted.coeffs[:-1]) if shifted.degree > 0 else 1
        for p in range(math.floor(bound), 1, -1):
            if term.f(p) < need:
                worst = max(worst, p)
                break
    return worst + 1


def threshold_estimate(family: CongruenceFamily, report: ConditionReport) -> int:
    """Heuristic first prime from which the congruence should hold.

    This is not a proven bound.  It is the maximum of a handful of places
    where small primes are known to misbehave (class collisions, the
    coefficient bound ``p >= i + 2``, primes dividing leading constants,
    indices too small to drop ``p**f(p)``), floored at 5.
    """
    if report.verdict is not Verdict.CERTIFIED:
        raise ValueError("threshold_estimate needs a CERTIFIED report")
    M = report.M
    at1 = [t.f_at_1 for t in family.terms]
    cands = [5]
    if at1:
        cands.append(max(abs(k) for k in at1) + 1)
        cands.append(max(at1) - min(at1) + 1)
    if M != INF:
        cands.append(family.N - int(M) + 2)
    exprs = [family.g0] + [t.g for t in family.terms] + [c.expression for c in report.checks]
    bad = set()
    for e in exprs:
        if e:
            bad |= exceptional_primes(e)
    if bad:
        cands.append(max(bad) + 1)
    if family.terms:
        cands.append(_least_p_for_indices(family, M))
    return max(cands)
