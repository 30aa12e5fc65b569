"""Exact rationals, p-adic valuations and p-adic approximations.

Rationals are plain :class:`fractions.Fraction` values.  A :class:`PadicApprox`
stands for the congruence class of rationals ``x`` with
``v_p(x - r * p**v_min) >= prec_abs``; every operation returns a class that
contains the exact result for any choice of members of the operand classes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from sympy import isprime

Rational = Fraction
RationalLike = Union[int, Fraction]

INF = math.inf


class Tri(enum.Enum):
    """Three-valued answer to a valuation question."""

    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


def check_prime(p: int, *, odd: bool = False) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")
    if odd and p == 2:
        raise ValueError("p = 2 is not supported")


def vp_int(n: int, p: int) -> int:
    """Valuation of a nonzero integer; no primality check."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_rational(q: RationalLike, p: int) -> Union[int, float]:
    """Return ``v_p(q)``, or ``math.inf`` when ``q == 0``.

    >>> vp_rational(Fraction(-691, 2730), 5)
    -1
    """
    check_prime(p)
    q = Fraction(q)
    if q == 0:
        return INF
    return vp_int(q.numerator, p) - vp_int(q.denominator, p)


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic number known modulo ``p**prec_abs``.

    Instances are normalized: if ``r != 0`` then ``r`` is a p-adic unit and
    ``v_min`` is the exact valuation of every member of the class; if
    ``r == 0`` then ``v_min == prec_abs - 1`` and only ``valuation >= prec_abs``
    is known.  Use :meth:`from_parts` or :func:`padic_from_rational` rather
    than the raw constructor.
    """

    p: int
    v_min: int
    r: int
    prec_abs: int

    def __post_init__(self):
        if self.prec_abs <= self.v_min:
            raise ValueError("prec_abs must exceed v_min")
        if not 0 <= self.r < self.p ** (self.prec_abs - self.v_min):
            raise ValueError("residue out of range")

    @classmethod
    def from_parts(cls, p: int, u: int, v: int, prec_abs: int) -> "PadicApprox":
        """Class of ``u * p**v`` modulo ``p**prec_abs`` (u any integer)."""
        if u == 0 or prec_abs <= v:
            return cls.zero(p, prec_abs)
        s = vp_int(u, p)
        v += s
        if prec_abs <= v:
            return cls.zero(p, prec_abs)
        u //= p**s
        return cls(p, v, u % p ** (prec_abs - v), prec_abs)

    @classmethod
    def zero(cls, p: int, prec_abs: int) -> "PadicApprox":
        return cls(p, prec_abs - 1, 0, prec_abs)

    # -- inspection -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when the class contains zero (nothing more is known)."""
        return self.r == 0

    def known_valuation(self) -> Union[int, None]:
        """Exact valuation shared by every member, or None if r == 0."""
        return None if self.r == 0 else self.v_min

    def valuation_lower_bound(self) -> int:
        return self.prec_abs if self.r == 0 else self.v_min

    def representative(self) -> Fraction:
        """The rational ``r * p**v_min``, a member of the class."""
        return Fraction(self.r) * Fraction(self.p) ** self.v_min

    def unit_digits(self) -> list[int]:
        """Base-p digits of ``r``, least significant first."""
        digits, r = [], self.r
        for _ in range(self.prec_abs - self.v_min):
            r, d = divmod(r, self.p)
            digits.append(d)
        return digits

    def contains(self, q: RationalLike) -> bool:
        q = _as_fraction(q)
        diff = q - self.representative()
        return diff == 0 or vp_rational(diff, self.p) >= self.prec_abs

    def with_prec(self, prec_abs: int) -> "PadicApprox":
        """Forget digits at or beyond ``prec_abs`` (never adds precision)."""
        if prec_abs >= self.prec_abs:
            return self
        return PadicApprox.from_parts(self.p, self.r, self.v_min, prec_abs)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "PadicApprox":
        if isinstance(other, PadicApprox):
            if other.p != self.p:
                raise ValueError(f"mismatched primes {self.p} and {other.p}")
            return other
        q = _as_fraction(other)
        # exact scalars: enough digits never to be the limiting operand
        if q == 0:
            return PadicApprox.zero(self.p, max(self.prec_abs, 0) + abs(self.v_min) + 2)
        v = vp_rational(q, self.p)
        prec = max(self.prec_abs, v) + abs(self.v_min) + abs(v) + 2
        return padic_from_rational(q, self.p, prec)

    def __add__(self, other) -> "PadicApprox":
        b = self._coerce(other)
        prec = min(self.prec_abs, b.prec_abs)
        v = min(self.v_min, b.v_min)
        u = self.r * self.p ** (self.v_min - v) + b.r * self.p ** (b.v_min - v)
        return PadicApprox.from_parts(self.p, u, v, prec)

    __radd__ = __add__

    def __neg__(self) -> "PadicApprox":
        return PadicApprox.from_parts(self.p, -self.r, self.v_min, self.prec_abs)

    def __sub__(self, other) -> "PadicApprox":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PadicApprox":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PadicApprox":
        b = self._coerce(other)
        va, vb = self.valuation_lower_bound(), b.valuation_lower_bound()
        prec = min(va + b.prec_abs, vb + self.prec_abs)
        if self.r == 0 or b.r == 0:
            return PadicApprox.zero(self.p, prec)
        return PadicApprox.from_parts(self.p, self.r * b.r, va + vb, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PadicApprox":
        """Inverse of a class whose valuation is known.

        ``x = p^v (u + O(p^(P-v)))`` gives ``1/x = p^-v (u^-1 + O(p^(P-v)))``,
        so the relative precision is preserved.
        """
        if self.r == 0:
            raise ZeroDivisionError("class contains zero; valuation unknown")
        rel = self.prec_abs - self.v_min
        inv = pow(self.r, -1, self.p**rel)
        return PadicApprox(self.p, -self.v_min, inv, rel - self.v_min)

    def __truediv__(self, other) -> "PadicApprox":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "PadicApprox":
        return self._coerce(other) * self.inverse()

    def __repr__(self) -> str:
        if self.r == 0:
            return f"PadicApprox(0 + O({self.p}^{self.prec_abs}))"
        return f"PadicApprox({self.r}*{self.p}^{self.v_min} + O({self.p}^{self.prec_abs}))"


def padic_from_rational(q: RationalLike, p: int, prec_abs: int) -> PadicApprox:
    """Class of ``q`` modulo ``p**prec_abs``.

    When ``v_p(q) >= prec_abs`` (including ``q == 0``) the result is the zero
    class, which still contains ``q``.
    """
    check_prime(p, odd=False)
    q = _as_fraction(q)
    if q == 0:
        return PadicApprox.zero(p, prec_abs)
    v_num = vp_int(q.numerator, p)
    v_den = vp_int(q.denominator, p)
    v = v_num - v_den
    if v >= prec_abs:
        return PadicApprox.zero(p, prec_abs)
    mod = p ** (prec_abs - v)
    unit_num = q.numerator // p**v_num
    unit_den = q.denominator // p**v_den
    return PadicApprox(p, v, unit_num * pow(unit_den, -1, mod) % mod, prec_abs)


def padic_add(a: PadicApprox, b: PadicApprox) -> PadicApprox:
    return a + b


def padic_mul(a: PadicApprox, b: PadicApprox) -> PadicApprox:
    return a * b


def valuation_at_least(x: PadicApprox, n: int) -> Tri:
    """Decide whether every member of the class has valuation >= n."""
    if x.r != 0:
        return Tri.YES if x.v_min >= n else Tri.NO
    return Tri.YES if x.prec_abs >= n else Tri.INDETERMINATE
