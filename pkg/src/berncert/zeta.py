"""Power-series coefficients of the p-adic zeta function on one residue class.

For an even class k modulo p - 1 there are p-adic numbers ``a_i(p, k)`` with

    (1 - p**(n-1)) * B_n = sum_i a_i(p, k) * n**i

for every n >= 0 in the class.  We recover ``a_0 .. a_d`` by interpolating
through ``d + 1`` sample indices ``n_j = n_0 + j (p - 1)``.  The Vandermonde
determinant is ``prod (l - j)(p - 1)``, a p-adic unit while ``d <= p - 2``,
so the solve loses no precision; the omitted terms ``i > d`` perturb each
estimate by something of valuation at least ``(p-2)/(p-1) * (d+1) - 2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bernoulli import bernoulli_exact, bernoulli_mod
from .numeric import PadicApprox, Tri, check_prime, padic_from_rational, valuation_at_least

SAMPLE_MARGIN = 2


def residue_rep(k: int, p: int) -> int:
    """Smallest even n >= 2 congruent to k modulo p - 1."""
    check_prime(p, odd=True)
    n = k % (p - 1)
    if n % 2:
        raise ValueError(f"class {k} mod {p - 1} is odd")
    return n or p - 1


def tail_bound(p: int, d: int) -> int:
    """Floor of the valuation bound on the first omitted coefficient a_{d+1}."""
    return math.floor(Fraction(p - 2, p - 1) * (d + 1) - 2)


@dataclass(frozen=True)
class ZetaCoeffEstimate:
    p: int
    k: int
    degree: int
    coeffs: tuple[PadicApprox, ...]
    samples: tuple[tuple[int, PadicApprox], ...]
    certified_prec: int

    def certified(self, i: int) -> PadicApprox:
        """``a_i`` modulo ``p**certified_prec``."""
        return self.coeffs[i].with_prec(self.certified_prec)

    def evaluate(self, n: int) -> PadicApprox:
        acc = PadicApprox.zero(self.p, self.coeffs[0].prec_abs)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc


def _sample(n: int, p: int, prec: int) -> PadicApprox:
    b = bernoulli_mod(n, p, max(prec, 1))
    return (b * (1 - Fraction(p) ** (n - 1))).with_prec(prec)


def estimate_coeffs(p: int, k: int, d: int) -> ZetaCoeffEstimate:
    check_prime(p, odd=True)
    if p < 5:
        raise ValueError("estimate_coeffs needs p >= 5")
    if not 0 <= d <= p - 2:
        raise ValueError(f"degree must lie in [0, p - 2] = [0, {p - 2}], got {d}")
    n0 = residue_rep(k, p)
    cert = tail_bound(p, d)
    sample_prec = max(cert + SAMPLE_MARGIN, 1)
    nodes = [n0 + j * (p - 1) for j in range(d + 1)]
    ys = [_sample(n, p, sample_prec) for n in nodes]

    # Newton divided differences; every divisor (l - j)(p - 1) is a unit
    dd = list(ys)
    for level in range(1, d + 1):
        for j in range(d, level - 1, -1):
            dd[j] = (dd[j] - dd[j - 1]) / (nodes[j] - nodes[j - level])
    # expand the Newton form into the power basis
    poly = [dd[d]]
    for j in range(d - 1, -1, -1):
        shifted = [PadicApprox.zero(p, sample_prec)] + poly
        for i, c in enumerate(poly):
            shifted[i] = shifted[i] - c * nodes[j]
        shifted[0] = shifted[0] + dd[j]
        poly = shifted

    cert = min(cert, min(c.prec_abs for c in poly))
    return ZetaCoeffEstimate(p, k % (p - 1), d, tuple(poly), tuple(zip(nodes, ys)), cert)


class BoundStatus(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNTESTABLE = "UNTESTABLE"


@dataclass(frozen=True)
class BoundCheck:
    k: int
    i: int
    statement: str
    required: Optional[int]
    status: BoundStatus
    detail: str = ""


@dataclass
class BoundReport:
    p: int
    degree: int
    estimates: dict[int, ZetaCoeffEstimate] = field(default_factory=dict)
    checks: list[BoundCheck] = field(default_factory=list)

    def by_status(self, status: BoundStatus) -> list[BoundCheck]:
        return [c for c in self.checks if c.status is status]

    @property
    def ok(self) -> bool:
        return not self.by_status(BoundStatus.FAIL)


def _valuation_check(est: ZetaCoeffEstimate, i: int, bound: Fraction, statement: str) -> BoundCheck:
    cert = est.certified_prec
    if bound >= cert:
        return BoundCheck(est.k, i, statement, math.ceil(bound), BoundStatus.UNTESTABLE,
                          f"bound {bound} not below certified precision {cert}")
    req = math.ceil(bound)
    got = valuation_at_least(est.certified(i), req)
    assert got is not Tri.INDETERMINATE
    status = BoundStatus.PASS if got is Tri.YES else BoundStatus.FAIL
    return BoundCheck(est.k, i, statement, req, status, repr(est.certified(i)))


def a1_crosscheck(est: ZetaCoeffEstimate) -> BoundCheck:
    """Compare a_1 against the value forced by the series at the class representative.

    ``a_1 = ((1 - p^(n0-1)) B_{n0} - a_0) / n0 - sum_{m>=2} a_m n0^(m-1)``;
    for classes k != 0 the a_0 term is zero.
    """
    p, cert = est.p, est.certified_prec
    n0 = residue_rep(est.k, p)
    a0 = Fraction(1) - Fraction(1, p) if est.k == 0 else Fraction(0)
    work = max(cert, 0) + 3
    lhs = (1 - Fraction(p) ** (n0 - 1)) * bernoulli_exact(n0) - a0
    rhs = padic_from_rational(lhs / n0, p, work)
    for m in range(2, est.degree + 1):
        rhs = rhs - est.coeffs[m] * n0 ** (m - 1)
    if est.degree < 1:
        return BoundCheck(est.k, 1, "a1-identity", cert, BoundStatus.UNTESTABLE, "degree < 1")
    diff = (est.coeffs[1] - rhs).with_prec(cert)
    got = valuation_at_least(diff, cert)
    status = BoundStatus.PASS if got is Tri.YES else BoundStatus.FAIL
    return BoundCheck(est.k, 1, "a1-identity", cert, status, repr(diff))


def check_bounds(p: int, d: int, *, classes: Optional[list[int]] = None) -> BoundReport:
    """Test the three coefficient statements for every even class mod p - 1.

    (1) ``a_0 = 1 - 1/p`` on the class of 0 and ``a_0 = 0`` elsewhere;
    (2) ``v_p(a_i) >= (p-2)/(p-1) * i - 2``;
    (3) ``v_p(a_i) >= i - 1`` when ``p >= i + 2``.
    Anything not decidable below the certified precision is UNTESTABLE.
    """
    report = BoundReport(p, d)
    ks = classes if classes is not None else list(range(0, p - 1, 2))
    for k in ks:
        est = estimate_coeffs(p, k, d)
        report.estimates[k] = est
        cert = est.certified_prec
        a0 = est.certified(0)
        if est.k == 0:
            target = padic_from_rational(Fraction(p - 1, p), p, cert)
            diff = (a0 - target).with_prec(cert)
        else:
            diff = a0
        ok = valuation_at_least(diff, cert) is Tri.YES
        report.checks.append(
            BoundCheck(est.k, 0, "1", cert, BoundStatus.PASS if ok else BoundStatus.FAIL, repr(a0))
        )
        for i in range(d + 1):
            report.checks.append(_valuation_check(est, i, Fraction(p - 2, p - 1) * i - 2, "2"))
        for i in range(d + 1):
            if p >= i + 2:
                report.checks.append(_valuation_check(est, i, Fraction(i - 1), "3"))
        report.checks.append(a1_crosscheck(est))
    return report
