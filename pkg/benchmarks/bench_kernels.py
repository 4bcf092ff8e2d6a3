#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Both backends are imported explicitly (ignoring the LCDCODES_PURE switch),
run on identical inputs, and checked for identical outputs while being
timed.
"""

import argparse
import random
import time
from array import array

from lcdcodes import _core_py
from lcdcodes.gf2m import GF2m
from lcdcodes.linalg import rref

try:
    from lcdcodes import _core
except ImportError:
    _core = None


def random_gen(rng, field, k, n):
    rows = []
    while len(rows) < k:
        cand = [[rng.randrange(field.q) for _ in range(n)] for _ in range(k)]
        rows, _ = rref(field, cand, n)
    return rows[:k]


def bench(label, fn, args, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    rng = random.Random(12345)

    f4 = GF2m(2)
    f8 = GF2m(3)
    cases = []

    g = random_gen(rng, f4, 9, 18)
    gen = array("H", [x for r in g for x in r])
    cases.append(("min_weight [18,9] GF(4), 4^9 messages", "min_weight",
                  (9, 18, 4, gen, f4.mul_table(), 1, 4**9)))

    g = random_gen(rng, f8, 6, 14)
    gen = array("H", [x for r in g for x in r])
    cases.append(("min_weight [14,6] GF(8), 8^6 messages", "min_weight",
                  (6, 14, 8, gen, f8.mul_table(), 1, 8**6)))

    g = random_gen(rng, f4, 8, 16)
    gen = array("H", [x for r in g for x in r])
    cases.append(("support_histogram [16,8] GF(4)", "support_histogram",
                  (8, 16, 4, gen, f4.mul_table(), None)))

    # frozen [10,4] code whose first LCD scaling sits at index 729, so the
    # scan does a fixed 730 candidates of Gram-rank work
    late = [(1, 0, 0, 3, 0, 1, 2, 2, 3, 0), (0, 1, 0, 0, 0, 1, 1, 0, 1, 2),
            (0, 0, 1, 2, 0, 2, 3, 3, 1, 0), (0, 0, 0, 0, 1, 0, 2, 1, 3, 3)]
    gen = array("H", [x for r in late for x in r])
    cases.append(("scan_scaling [10,4] GF(4), 730 candidates", "scan_scaling",
                  (4, 10, 4, gen, f4.mul_table(), f4.inv_table(), 0, 3**10)))

    g = random_gen(rng, f4, 4, 11)
    gen = array("H", [x for r in g for x in r])
    u = array("H", g[0])
    cases.append(("count_blocking [11,4] GF(4), 3^11 vectors", "count_blocking",
                  (4, 11, 4, gen, f4.mul_table(), u)))

    g = random_gen(rng, f4, 3, 6)
    gen = array("H", [x for r in g for x in r])
    words = []
    from lcdcodes.codes import codewords, from_generator
    code = from_generator(f4, 6, g)
    for w in codewords(code):
        if any(w):
            words.extend(w)
    cases.append(("union_count [6,3] GF(4), 3^6 x 63 pairs", "union_count",
                  (3, 6, 4, gen, f4.mul_table(), array("H", words), 63)))

    print(f"{'case':<45} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for label, fname, fargs in cases:
        def call(impl):
            a = list(fargs)
            if fname == "support_histogram":
                a[-1] = array("q", bytes(8 << a[1]))
                getattr(impl, fname)(*a)
                return list(a[-1])
            return getattr(impl, fname)(*a)

        t_pure, r_pure = bench(label, call, (_core_py,), args.repeat)
        if _core is None:
            print(f"{label:<45} {t_pure:>9.4f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_c, r_c = bench(label, call, (_core,), args.repeat)
        assert r_pure == r_c, f"backend mismatch on {label}"
        print(f"{label:<45} {t_pure:>9.4f}s {t_c:>9.4f}s {t_pure / t_c:>8.1f}x")
    if _core is None:
        print("\ncompiled backend not built; run `pip install -e .` first")


if __name__ == "__main__":
    main()
