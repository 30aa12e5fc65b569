"""Univariate polynomials and rational functions over Q in the variable t."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from sympy import primefactors

from .numeric import INF, RationalLike


class PoleError(ZeroDivisionError):
    """Evaluation at a root of the denominator."""


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``t**i``."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Sequence[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @classmethod
    def t(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def vt(self) -> Union[int, float]:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c: RationalLike) -> "Polynomial":
        return Polynomial([c * x for x in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``t**k`` (k >= 0) or divide exactly (k < 0)."""
        if k >= 0:
            return Polynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError("not divisible by the requested power of t")
        return Polynomial(self.coeffs[-k:])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] / other.lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def monic(self) -> "Polynomial":
        return self.scale(1 / self.lead) if self else self

    def content(self) -> Fraction:
        """Positive rational c with ``self / c`` primitive in Z[t]."""
        if not self:
            return Fraction(0)
        num = reduce(math.gcd, (c.numerator for c in self.coeffs))
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd in Q[t] (zero if both are zero)."""
    while b:
        a, b = b, divmod(a, b)[1]
    return a.monic()


_ONE = Polynomial([1])


@dataclass(frozen=True)
class RationalFunction:
    """Reduced fraction of polynomials with monic denominator.

    The canonical form is unique, so dataclass equality is field equality.
    """

    num: Polynomial
    den: Polynomial

    def __init__(self, num: Polynomial, den: Polynomial = _ONE):
        if not den:
            raise ZeroDivisionError("denominator is the zero polynomial")
        if not num:
            num, den = Polynomial(), _ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = divmod(num, g)[0], divmod(den, g)[0]
            lead = den.lead
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def constant(cls, c: RationalLike) -> "RationalFunction":
        return cls(Polynomial([c]))

    @classmethod
    def t(cls) -> "RationalFunction":
        return cls(Polynomial.t())

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return cls(x)
        if isinstance(x, (int, Fraction)):
            return cls.constant(x)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError("not a polynomial")
        return self.num

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if not self:
                raise ZeroDivisionError("zero function to a negative power")
            return RationalFunction(self.den, self.num) ** (-k)
        num, den = _ONE, _ONE
        base_n, base_d = self.num, self.den
        while k:
            if k & 1:
                num, den = num * base_n, den * base_d
            base_n, base_d = base_n * base_n, base_d * base_d
            k >>= 1
        return RationalFunction(num, den)

    def vt(self) -> Union[int, float]:
        """Order of vanishing at t = 0; ``math.inf`` for the zero function."""
        if not self:
            return INF
        return self.num.vt() - self.den.vt()

    def __call__(self, m: RationalLike) -> Fraction:
        return evaluate(self, m)

    def __repr__(self) -> str:
        from .expr import format_expr

        return f"RationalFunction({format_expr(self)!r})"


def vt(g: RationalFunction) -> Union[int, float]:
    return g.vt()


def evaluate(g: RationalFunction, m: RationalLike) -> Fraction:
    d = g.den(m)
    if d == 0:
        raise PoleError(f"pole at t = {m}")
    return g.num(m) / d


def integer_normal_form(g: RationalFunction) -> tuple[int, Polynomial, Polynomial]:
    """Write ``g = t**v * a(t) / b(t)`` with ``a, b`` in Z[t], ``a(0)*b(0) != 0``.

    The rational constant of ``g`` is carried by ``a`` and ``b`` (their
    coefficients are jointly coprime and ``b`` has positive leading
    coefficient), so ``a(0)*b(0)`` sees primes in the leading constant too.
    """
    if not g:
        raise ValueError("zero function has no normal form")
    vn, vd = g.num.vt(), g.den.vt()
    a, b = g.num.shift(-vn), g.den.shift(-vd)
    ca, cb = a.content(), b.content()
    c = ca / cb
    a_int = a.scale(1 / ca).scale(c.numerator)
    b_int = b.scale(1 / cb).scale(c.denominator)
    return vn - vd, a_int, b_int


def exceptional_primes(g: RationalFunction) -> frozenset[int]:
    """Primes p for which ``v_p(g(p)) == vt(g)`` may fail.

    These are the prime divisors of ``a(0)*b(0)`` in :func:`integer_normal_form`.
    """
    _, a, b = integer_normal_form(g)
    n = int(a.coeffs[0] * b.coeffs[0])
    return frozenset(primefactors(abs(n)))


T = RationalFunction.t()
