"""Benchmark the compiled rank kernel against the pure-Python fallback.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_modp.py

Times Gaussian elimination over F_p on random dense matrices, plus one
realistic workload (the full homology table of a three-variable ideal).
"""

import random
import sys
import time
from array import array
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from carryideals import modp, modp_py  # noqa: E402


def random_matrix(rng, rows, cols, p):
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]


def time_call(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def compiled_rank(rows, ncols, p):
    flat = array("q", [v for row in rows for v in row])
    return modp._modpc.rank_mod_p(flat, len(rows), ncols, p)


def bench_ranks():
    rng = random.Random(1)
    print(f"{'prime':>6} {'size':>10} {'pure (ms)':>11} {'compiled (ms)':>14} {'speedup':>8}")
    for p in (2, 3, 5, 101):
        for size in (60, 150, 300):
            rows = random_matrix(rng, size, size, p)
            pure = time_call(modp_py.rank, rows, size, p)
            line = f"{p:>6} {size:>4}x{size:<5} {pure * 1000:>11.2f}"
            if modp.HAVE_COMPILED:
                fast = time_call(compiled_rank, rows, size, p)
                line += f" {fast * 1000:>14.2f} {pure / fast:>7.1f}x"
            else:
                line += f" {'(not built)':>14}"
            print(line)


def bench_homology():
    """End-to-end homology tables; strand assembly in Python amortizes the
    kernel difference when the quotient is thin."""
    from carryideals.ideals import MonomialIdeal, carry_ideal
    from carryideals.koszul import koszul_betti

    workloads = [
        ("carry ideal n=3 p=5 d=30 c=(1,1)", carry_ideal((1, 1), 30, 3, 5)),
        (
            "pure powers <x^13,y^13,z^13> p=5",
            MonomialIdeal([(13, 0, 0), (0, 13, 0), (0, 0, 13)], 3, 5),
        ),
    ]
    for name, ideal in workloads:
        times = {}
        for label, force_pure in (("compiled", False), ("pure", True)):
            if not modp.HAVE_COMPILED and not force_pure:
                continue
            modp.USING_COMPILED = modp.HAVE_COMPILED and not force_pure
            times[label] = time_call(lambda: koszul_betti(ideal), repeats=1)
        modp.USING_COMPILED = modp.HAVE_COMPILED
        parts = "  ".join(f"{k}: {v:.2f}s" for k, v in times.items())
        print(f"{name}  {parts}")


def main():
    print(f"compiled kernel available: {modp.HAVE_COMPILED}")
    bench_ranks()
    bench_homology()


if __name__ == "__main__":
    main()
