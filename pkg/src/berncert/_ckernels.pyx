# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled power-sum kernel; same contract as ``_pykernels.power_sum_mod``."""

from libc.stdint cimport uint64_t

from . import _pykernels

cdef extern from *:
    """
    typedef unsigned __int128 berncert_u128;
    static inline uint64_t berncert_mulmod(uint64_t a, uint64_t b, uint64_t m) {
        return (uint64_t)(((berncert_u128)a * b) % m);
    }
    """
    uint64_t mulmod "berncert_mulmod"(uint64_t a, uint64_t b, uint64_t m) nogil


cdef inline uint64_t powmod(uint64_t base, uint64_t e, uint64_t m) noexcept nogil:
    cdef uint64_t result = 1 % m
    base %= m
    while e:
        if e & 1:
            result = mulmod(result, base, m)
        base = mulmod(base, base, m)
        e >>= 1
    return result


# moduli below 2**63 keep the running sum of two residues inside uint64
_MAX_MODULUS = 1 << 63


def power_sum_mod(n, count, modulus, skip=0):
    """Return ``sum(a**n for 1 <= a < count) % modulus``, skipping multiples of ``skip``."""
    if modulus >= _MAX_MODULUS or n < 0 or count >= _MAX_MODULUS:
        return _pykernels.power_sum_mod(n, count, modulus, skip)
    if modulus == 1:
        return 0
    cdef uint64_t m = modulus
    cdef uint64_t e = n
    cdef uint64_t c = count
    cdef uint64_t s = skip if skip > 1 else 0
    cdef uint64_t acc = 0
    cdef uint64_t a
    with nogil:
        for a in range(1, c):
            if s and a % s == 0:
                continue
            acc += powmod(a, e, m)
            if acc >= m:
                acc -= m
    return int(acc)
