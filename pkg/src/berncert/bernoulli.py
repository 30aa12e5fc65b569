"""Bernoulli numbers: exact values, denominators, and classes modulo p^k.

Exact values come from the tangent numbers (integer-only arithmetic), so a
table up to index 2000 takes about a second.  For larger indices
:func:`bernoulli_mod` reduces a power sum instead: for even ``n >= 4`` and
``M = p**r``,

    sum_{a < M} a**n / M  ==  B_n + E,    v_p(E) >= 2r - 1 - v_p(n + 1),

because the ``B_{n-1}`` term of Faulhaber's formula vanishes.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from sympy import divisors, isprime

from .kernels import power_sum_mod
from .numeric import PadicApprox, check_prime, padic_from_rational, vp_int

EXACT_THRESHOLD = 2000


class IndexTooLarge(ValueError):
    """Requested an exact Bernoulli number above the configured threshold."""


class _Table:
    """Lazily extended table of tangent numbers T_1, T_2, ..."""

    def __init__(self):
        self._lock = threading.Lock()
        self._tangent: list[int] = [0]
        self._cache: dict[int, Fraction] = {}

    def _extend(self, kmax: int) -> None:
        # Brent-Harvey in-place recurrence, O(kmax^2) small-integer multiplies
        t = [0] * (kmax + 1)
        t[1] = 1
        for k in range(2, kmax + 1):
            t[k] = (k - 1) * t[k - 1]
        for k in range(2, kmax + 1):
            for j in range(k, kmax + 1):
                t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
        self._tangent = t

    def even(self, n: int) -> Fraction:
        """B_n for even n >= 2."""
        k = n // 2
        with self._lock:
            hit = self._cache.get(n)
            if hit is not None:
                return hit
            if k >= len(self._tangent):
                self._extend(min(max(k, 2 * len(self._tangent)), EXACT_THRESHOLD // 2 + 1))
            tk = self._tangent[k]
            four = 4**k
            value = Fraction((-1) ** (k - 1) * n * tk, four * (four - 1))
            self._cache[n] = value
            return value


_TABLE = _Table()


def bernoulli_exact(n: int, *, limit: int = EXACT_THRESHOLD) -> Fraction:
    """Exact ``B_n`` with ``B_1 = -1/2``.

    >>> bernoulli_exact(12)
    Fraction(-691, 2730)
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a non-negative integer, got {n!r}")
    if n > limit or n > EXACT_THRESHOLD:
        raise IndexTooLarge(f"B_{n} is above the exact threshold {min(limit, EXACT_THRESHOLD)}; use bernoulli_mod")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    return _TABLE.even(n)


def vsc_denominator(n: int) -> int:
    """Product of the primes p with (p - 1) | n, for even n >= 2."""
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ValueError(f"n must be an even integer >= 2, got {n!r}")
    out = 1
    for d in divisors(n):
        if isprime(d + 1):
            out *= d + 1
    return out


def bernoulli_mod_powersum(n: int, p: int, prec_abs: int) -> PadicApprox:
    """Class of ``B_n`` mod ``p**prec_abs`` from one power sum (even n >= 4)."""
    if n < 4 or n % 2:
        raise ValueError("the power-sum route needs an even index >= 4")
    r = -(-(prec_abs + 1 + vp_int(n + 1, p)) // 2)
    top = r + prec_abs + 1
    # multiples of p contribute p**n * (...), invisible modulo p**top
    skip = p if n >= top else 0
    s = power_sum_mod(n, p**r, p**top, skip)
    return PadicApprox.from_parts(p, s, -r, prec_abs)


def bernoulli_mod(n: int, p: int, prec_abs: int, *, method: str = "auto") -> PadicApprox:
    """Class of ``B_n`` modulo ``p**prec_abs`` for a prime ``p >= 5``.

    ``method`` is ``"auto"`` (exact table up to the threshold, power sum
    above it), ``"exact"`` or ``"powersum"``.
    """
    check_prime(p, odd=True)
    if p < 5:
        raise ValueError("bernoulli_mod needs p >= 5")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a non-negative integer, got {n!r}")
    if prec_abs < 1:
        raise ValueError("prec_abs must be >= 1")
    if n > 1 and n % 2:
        return PadicApprox.zero(p, prec_abs)
    if method == "auto":
        method = "exact" if n <= EXACT_THRESHOLD or n < 4 else "powersum"
    if method == "exact":
        return padic_from_rational(bernoulli_exact(n), p, prec_abs)
    if method == "powersum":
        return bernoulli_mod_powersum(n, p, prec_abs)
    raise ValueError(f"unknown method {method!r}")


def zeta_at_negative(n: int) -> Fraction:
    """``zeta(-n) = -B_{n+1}/(n+1)`` for n >= 1.

    n = 0 is refused: with ``B_1 = -1/2`` the formula would give +1/2.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("zeta_at_negative needs n >= 1")
    return -bernoulli_exact(n + 1) / (n + 1)

