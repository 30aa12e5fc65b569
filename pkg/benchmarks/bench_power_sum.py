"""Compare the compiled and pure-Python power-sum kernels.

    python benchmarks/bench_power_sum.py [--repeat 3]

Each row is one power sum of the size bernoulli_mod issues for B_n mod p^prec.
"""

import argparse
import time

from berncert import _pykernels

try:
    from berncert import _ckernels
except ImportError:
    _ckernels = None

# (n, p, prec): indices as produced by f(p) = p^2 + 1 near the sweep's upper end
CASES = [
    (2210, 47, 3),
    (2210, 47, 5),
    (2810, 53, 5),
    (5000, 11, 7),
    (3482, 59, 4),
]


def workload(n, p, prec):
    r = -(-(prec + 1) // 2)
    top = r + prec + 1
    return n, p**r, p**top, p


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'n':>6} {'p':>4} {'prec':>4} {'terms':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n, p, prec in CASES:
        wl = workload(n, p, prec)
        t_py, v_py = best_of(_pykernels.power_sum_mod, wl, args.repeat)
        if _ckernels is None:
            print(f"{n:>6} {p:>4} {prec:>4} {wl[1]:>9} {t_py:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        t_c, v_c = best_of(_ckernels.power_sum_mod, wl, args.repeat)
        assert v_c == v_py, "backends disagree"
        print(f"{n:>6} {p:>4} {prec:>4} {wl[1]:>9} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>7.1f}x")
    if _ckernels is None:
        print("compiled kernel not built; install with `pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
