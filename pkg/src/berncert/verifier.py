"""Prime-by-prime empirical check of a congruence family."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from sympy import isprime, primerange

from .bernoulli import bernoulli_mod
from .checker import CongruenceFamily
from .numeric import PadicApprox, Tri, padic_from_rational, valuation_at_least, vp_rational
from .ratfunc import PoleError

DEFAULT_GUARD = 2
DEFAULT_P_MIN = 5


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class PrimeResult:
    p: int
    status: Status
    observed_valuation: Optional[int] = None
    # True when only "observed_valuation or more" is known
    at_least: bool = False
    precision_used: int = 0
    reason: str = ""

    def valuation_text(self) -> str:
        if self.observed_valuation is None:
            return "-"
        return f">={self.observed_valuation}" if self.at_least else str(self.observed_valuation)


@dataclass
class VerificationReport:
    family: CongruenceFamily
    guard: int
    prime_results: list[PrimeResult] = field(default_factory=list)

    def count(self, status: Status) -> int:
        return sum(r.status is status for r in self.prime_results)

    @property
    def summary(self) -> dict[str, int]:
        tested = self.count(Status.PASS) + self.count(Status.FAIL) + self.count(Status.INDETERMINATE)
        return {
            "primes": len(self.prime_results),
            "tested": tested,
            "pass": self.count(Status.PASS),
            "fail": self.count(Status.FAIL),
            "indeterminate": self.count(Status.INDETERMINATE),
            "skipped": self.count(Status.SKIPPED),
        }

    @property
    def ok(self) -> bool:
        return self.count(Status.FAIL) == 0


def _skip_reason(family: CongruenceFamily, p: int) -> Optional[str]:
    if p <= 3:
        return "p <= 3"
    if not isprime(p):
        return "not prime"
    for label, g in [("g0", family.g0)] + [(f"g{i}", t.g) for i, t in enumerate(family.terms, 1)]:
        if g.den(p) == 0:
            return f"pole of {label} at p"
    for i, t in enumerate(family.terms, 1):
        if t.f(p) < 1:
            return f"f{i}(p) < 1"
    return None


def defect(family: CongruenceFamily, p: int, prec: int) -> PadicApprox:
    """Class of ``sum g_i(p) B_{f_i(p)} - g0(p)`` modulo ``p**prec``."""
    total = PadicApprox.zero(p, prec)
    for term in family.terms:
        gv = term.g(p)
        if gv == 0:
            continue
        vg = vp_rational(gv, p)
        boost = max(0, -vg)
        b = bernoulli_mod(int(term.f(p)), p, prec + boost)
        # B_n has valuation >= -1, so g needs prec + 1 digits not to limit the product
        g_cls = padic_from_rational(gv, p, prec + 1 + max(vg, 0) + boost)
        total = total + (g_cls * b).with_prec(prec)
    return (total - padic_from_rational(family.g0(p), p, prec)).with_prec(prec)


def verify_prime(family: CongruenceFamily, p: int, guard: int = DEFAULT_GUARD) -> PrimeResult:
    if guard < 1:
        raise ValueError("guard must be >= 1")
    reason = _skip_reason(family, p)
    if reason:
        return PrimeResult(p, Status.SKIPPED, reason=reason)
    N = family.N
    try:
        for g in (guard, 2 * guard):
            prec = N + g
            d = defect(family, p, prec)
            answer = valuation_at_least(d, N)
            if answer is not Tri.INDETERMINATE:
                break
    except PoleError as exc:
        return PrimeResult(p, Status.SKIPPED, reason=str(exc))
    if answer is Tri.INDETERMINATE:
        return PrimeResult(p, Status.INDETERMINATE, d.prec_abs, True, prec)
    known = d.known_valuation()
    cap = N + guard
    if known is None or known >= cap:
        observed, at_least = cap, True
    else:
        observed, at_least = known, False
    status = Status.PASS if answer is Tri.YES else Status.FAIL
    return PrimeResult(p, status, observed, at_least, prec)


def _verify_one(args):
    family, p, guard = args
    return verify_prime(family, p, guard)


def verify_range(
    family: CongruenceFamily,
    p_min: int = DEFAULT_P_MIN,
    p_max: int = 50,
    guard: int = DEFAULT_GUARD,
    jobs: int = 1,
) -> VerificationReport:
    """Run :func:`verify_prime` on every prime in ``[max(p_min, 5), p_max]``."""
    primes = list(primerange(max(p_min, DEFAULT_P_MIN), p_max + 1))
    report = VerificationReport(family, guard)
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, [(family, p, guard) for p in primes]))
    else:
        results = [verify_prime(family, p, guard) for p in primes]
    report.prime_results = sorted(results, key=lambda r: r.p)
    return report
