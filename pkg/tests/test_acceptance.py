"""End-to-end acceptance suite.

One test per criterion; each prints a PASS/FAIL line (run with -s to see
them) and enforces its runtime budget and numeric tolerances inline.
"""

import contextlib
import math
import random
import time
from fractions import Fraction
from itertools import product

from helpers import all_codes, blocking_count_oracle

from lcdcodes import agcodes, bounds
from lcdcodes.codes import (codewords, dual, from_spanning, is_lcd,
                            min_distance, puncture, scale_code, weight)
from lcdcodes.gf2m import GF2m, vec_inverse
from lcdcodes.kernels import support_mask_counts
from lcdcodes.lcdify import (NoScalingError, audit_scaling_union,
                             audit_support_counts, count_blocking_scalings,
                             count_with_support, find_lcd_scaling,
                             scaling_feasibility)

F2 = GF2m(1)
F4 = GF2m(2)
F8 = GF2m(3)
F16 = GF2m(4)


@contextlib.contextmanager
def criterion(num: int, label: str):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\n[criterion {num}] FAIL ({label})")
        raise
    print(f"\n[criterion {num}] PASS ({label}) [{time.perf_counter() - t0:.2f}s]")


def test_criterion_1_field_arithmetic_suite():
    with criterion(1, "exhaustive field axioms and sqrt/square on GF(4/8/16), < 10 s"):
        t0 = time.perf_counter()
        for f in (F4, F8, F16):
            els = list(f.elements())
            for a in els:
                assert f.add(a, a) == 0
                if a:
                    assert f.mul(a, f.inv(a)) == 1
                s = f.sqrt(a)
                assert f.mul(s, s) == a
                assert f.sqrt(f.mul(a, a)) == a
                for b in els:
                    assert f.mul(a, b) == f.mul(b, a)
                    for c in els:
                        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
        assert time.perf_counter() - t0 < 10.0


def test_criterion_2_duality_identity():
    with criterion(2, "(a*C)-dual identity, exhaustive small + 1000 random"):
        failures = 0
        for n in (1, 2, 3):
            vectors = list(product(F4.nonzero(), repeat=n))
            for k in range(0, min(n, 2) + 1):
                for code in all_codes(F4, n, k):
                    dual_code = dual(code)
                    for a in vectors:
                        lhs = dual(scale_code(a, code))
                        rhs = scale_code(vec_inverse(F4, a), dual_code)
                        if lhs != rhs:
                            failures += 1
        rng = random.Random(2718)
        for _ in range(1000):
            f = rng.choice([F2, F4, F8])
            n = rng.randint(4, 8)
            code = from_spanning(f, n, [[rng.randrange(f.q) for _ in range(n)]
                                        for _ in range(rng.randint(1, n))])
            a = tuple(rng.randrange(1, f.q) for _ in range(n))
            lhs = dual(scale_code(a, code))
            rhs = scale_code(vec_inverse(f, a), dual(code))
            if lhs != rhs:
                failures += 1
        assert failures == 0


def test_criterion_3_hermitian_code_sweep():
    with criterion(3, "Hermitian r=2 sweep m=1..7: dims exact, distances, < 1 min"):
        t0 = time.perf_counter()
        places = agcodes.hermitian_places(2, F4)
        curve = agcodes.hermitian_curve(2)
        for m in range(1, 8):
            code = agcodes.build_code(F4, curve, places, m)
            dual_code = dual(code)
            assert code.k == m, f"m={m}: dim {code.k}"
            assert dual_code.k == 8 - m
            assert min_distance(code) >= 8 - m
            assert min_distance(dual_code) >= m
            if m == 3:
                assert min_distance(code) == 5
        assert time.perf_counter() - t0 < 60.0


def test_criterion_4_counting_audit_oracle():
    with criterion(4, "support counts vs enumeration, bound audit, blocker counts"):
        places = agcodes.hermitian_places(2, F4)
        code = agcodes.build_code(F4, agcodes.hermitian_curve(2), places, 3)
        dual_code = dual(code)

        hist = support_mask_counts(F4, code.gen, 8)
        hist_dual = support_mask_counts(F4, dual_code.gen, 8)
        for mask in range(1, 256):
            assert count_with_support(code, mask) == hist[mask]
            assert count_with_support(dual_code, mask) == hist_dual[mask]

        audit = audit_support_counts(code, Fraction(1, 8))
        assert audit.exhaustive and len(audit.reports) == 255
        assert audit.slack_exact == 2048
        assert audit.all_ok

        discrepancies = 0
        for keep in ([0, 1, 2, 3, 4], [0, 1, 2, 3, 4, 5]):
            sub = puncture(code, keep)
            for u in codewords(sub):
                if not weight(u):
                    continue
                if count_blocking_scalings(sub, u) != blocking_count_oracle(sub, u):
                    discrepancies += 1
        assert discrepancies == 0


def test_criterion_5_constructive_pipeline():
    with criterion(5, "search succeeds iff union bound leaves room, all [n<=4, k=2] over GF(4)"):
        inconsistencies = 0
        for n in (2, 3, 4):
            for code in all_codes(F4, n, 2):
                report = audit_scaling_union(code)
                try:
                    cert = find_lcd_scaling(code, mode="exhaustive")
                    ok = report.holds and is_lcd(scale_code(cert.a, code))
                except NoScalingError:
                    ok = (not report.holds) and report.union_size == report.total
                if not ok:
                    inconsistencies += 1
        assert inconsistencies == 0


def test_criterion_6_asymptotic_numerics():
    with criterion(6, "pinned rate/margin/window numbers at q=128, < 1 s"):
        t0 = time.perf_counter()
        assert bounds.best_genus_ratio(128) == Fraction(11, 105)

        gv = bounds.gv_rate(128, 0.68)
        tv = bounds.tv_rate(128, 0.68)
        assert abs(gv - 0.19190) < 2e-4
        assert abs(tv - 0.21524) < 1e-5
        assert tv > gv

        m1, m2 = bounds.rate_margins(128, 0.215, 0.6802381, Fraction(11, 105))
        assert abs(m1 - 1.25667) < 1e-5
        # second margin: direct evaluation of the stated formula gives
        # 0.6802381*log2(127) - 0.215*7 - 3 - 22/105 = 0.0394458
        assert abs(m2 - 0.0394458) < 1e-5
        assert m1 > 0 and m2 > 0

        win1, _ = bounds.rate_windows(128)
        assert abs(win1[0] - 0.20952) < 1e-5
        assert abs(win1[1] - 0.22531) < 1e-5

        assert time.perf_counter() - t0 < 1.0


def test_criterion_7_crossover_at_q256():
    with criterion(7, "two GV-beating intervals at q=256, certified deltas, large-n margin"):
        prof = bounds.crossover_intervals(256)
        assert prof.crossover_1 is not None and prof.crossover_2 is not None
        lo1, hi1 = prof.crossover_1
        lo2, hi2 = prof.crossover_2
        assert lo1 < 0.70 < hi1
        assert lo2 < 0.15 < hi2

        margin1 = bounds.tv_rate(256, 0.70) - bounds.gv_rate(256, 0.70)
        margin2 = bounds.tv_rate(256, 0.15) - bounds.gv_rate(256, 0.15)
        assert abs(margin1 - 0.043) < 1e-3
        assert abs(margin2 - 0.0095) < 1e-3

        lam = bounds.best_genus_ratio(256)
        for window, (lo, hi) in ((1, prof.crossover_1), (2, prof.crossover_2)):
            for t in (0.05, 0.5, 0.95):
                d = lo + t * (hi - lo)
                rate = bounds.tv_rate(256, d)
                assert rate > bounds.gv_rate(256, d)
                if window == 1:
                    m1, m2 = bounds.rate_margins(256, rate, d, lam)
                else:
                    m1, m2 = bounds.rate_margins(256, 1 - rate,
                                                 rate - float(lam), lam)
                assert m1 > 0 and m2 > 0

        # the asymptotic family itself is not desk-reproducible: the
        # existence inequality is checked in the log2 domain at n = 10^6
        n = 10**6
        feas = scaling_feasibility(n, int(0.215 * n), math.ceil(0.68024 * n),
                                   7, Fraction(11, 105))
        assert feas.holds is True and feas.margin > 0


def test_criterion_8_consistency_identities():
    with criterion(8, "tower ratio identities, exact rationals"):
        for q in (4, 16, 64, 256, 1024, 4096):
            assert 1 / bounds.best_genus_ratio(q) == math.isqrt(q) - 1

        for m in range(1, 6):
            q = 2 ** (2 * m + 1)
            ratio = bounds.tower_params("second", q).ratio_limit
            assert 1 / ratio == bounds.best_genus_ratio(q)
            assert ratio == Fraction(2 * (2 ** (m + 1) - 1) * (2**m - 1),
                                     3 * (2**m - 1) + 1)

        for t in range(1, 7):
            assert bounds.tower_params("first", 4, t).n_lower == 3 * 2 ** (t - 1) + 1
