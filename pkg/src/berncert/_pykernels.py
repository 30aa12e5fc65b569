"""Pure-Python reference versions of the compiled kernels in ``_ckernels``."""


def power_sum_mod(n: int, count: int, modulus: int, skip: int = 0) -> int:
    """Return ``sum(a**n for 1 <= a < count) % modulus``.

    With ``skip > 1``, terms whose base is a multiple of ``skip`` are left out.
    """
    if modulus == 1:
        return 0
    acc = 0
    if skip > 1:
        for a in range(1, count):
            if a % skip:
                acc += pow(a, n, modulus)
    else:
        for a in range(1, count):
            acc += pow(a, n, modulus)
    return acc % modulus
