"""Certify and empirically test congruences between Bernoulli numbers.

Families ``sum_i g_i(p) B_{f_i(p)} == g0(p) (mod p^N)`` with polynomial
indices ``f_i`` and rational-function weights ``g_i`` are checked two ways:
symbolically (:func:`check_theorem`) and prime by prime (:func:`verify_range`).
"""

__version__ = "0.1.0"

from .bernoulli import bernoulli_exact, bernoulli_mod, vsc_denominator, zeta_at_negative
from .checker import CongruenceFamily, ConditionReport, Term, Verdict, check_theorem
from .expr import format_expr, parse_expr
from .families import load_corpus, load_family
from .numeric import PadicApprox, padic_from_rational, valuation_at_least, vp_rational
from .ratfunc import Polynomial, RationalFunction, exceptional_primes
from .verifier import VerificationReport, verify_prime, verify_range
from .zeta import check_bounds, estimate_coeffs, residue_rep

__all__ = [
    "CongruenceFamily",
    "ConditionReport",
    "PadicApprox",
    "Polynomial",
    "RationalFunction",
    "Term",
    "Verdict",
    "VerificationReport",
    "bernoulli_exact",
    "bernoulli_mod",
    "check_bounds",
    "check_theorem",
    "estimate_coeffs",
    "exceptional_primes",
    "format_expr",
    "load_corpus",
    "load_family",
    "padic_from_rational",
    "parse_expr",
    "residue_rep",
    "valuation_at_least",
    "verify_prime",
    "verify_range",
    "vp_rational",
    "vsc_denominator",
    "zeta_at_negative",
]
