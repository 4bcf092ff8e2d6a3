"""Turning a linear code into an equivalent LCD code by rescaling.

A scaling vector a (all coordinates nonzero) is *bad* for a nonzero
codeword u when the squared rescaling a^2 * u lands in the dual: exactly
then a*u lies in both a*C and its dual, so a*C has a nonzero hull.  The
search for an LCD rescaling is the search for a vector that is bad for no
codeword.  This module provides

  * exact support-count statistics (how many codewords sit on a given
    support, for the code and its dual),
  * the count of bad scaling vectors contributed by a single codeword
    (in characteristic 2 it factors through the dual support counts),
  * the slack threshold and the two inequality families that guarantee a
    good scaling vector exists,
  * the constructive search itself (exhaustive or seeded-random), and
  * a full-enumeration audit of the union bound behind the guarantee.

Exact rational arithmetic is used for every comparison that can be made
exact; otherwise comparisons happen in the log2 domain and near-ties are
reported as indeterminate rather than guessed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import kernels
from .codes import (EnumerationBudgetError, LinearCode, codewords, contains,
                    count_supported_within, dual, is_lcd, scale_code, support,
                    weight)

INDETERMINATE_EPS = 1e-9


class NoScalingError(RuntimeError):
    """Proven: no rescaling of this code is LCD."""


class SearchInconclusiveError(RuntimeError):
    """Randomized search budget exhausted without a verdict."""


def count_with_support(code: LinearCode, mask: int) -> int:
    """Exact number of codewords whose support is exactly the given mask,
    by inclusion-exclusion over the submask lattice."""
    if mask == 0:
        raise ValueError("support mask must be nonempty")
    w = mask.bit_count()
    total = 0
    sub = mask
    while True:
        sign = -1 if (w - sub.bit_count()) & 1 else 1
        total += sign * count_supported_within(code, sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return total


def count_blocking_scalings(code: LinearCode, u) -> int:
    """Number of all-nonzero vectors a with a^2 * u in the dual.

    In characteristic 2 every dual word with support equal to supp(u) is
    a^2 * u for a unique choice of a on that support (each coordinate
    ratio has a unique square root), and the off-support coordinates of a
    are free; so the count is (q-1)^(n-w) times the dual support count.
    """
    u = tuple(u)
    if weight(u) == 0:
        raise ValueError("u must be a nonzero codeword")
    if not contains(code, u):
        raise ValueError("u is not a codeword of this code")
    mask = support(u)
    w = mask.bit_count()
    reachable = count_with_support(dual(code), mask)
    return (code.field.q - 1) ** (code.n - w) * reachable


def support_slack_log2(n: int, q_bits, ratio) -> float:
    """log2 of the slack term 2*(2*q^ratio)^n added to the support bounds."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    return 1.0 + n * (1.0 + float(ratio) * float(q_bits))


def _exact_slack(n: int, q_bits, ratio) -> int | None:
    """The slack as an exact integer when 1 + n + ratio*n*q_bits is integral."""
    try:
        exponent = 1 + n + Fraction(ratio) * n * Fraction(q_bits)
    except (TypeError, ValueError):
        return None
    if exponent.denominator != 1:
        return None
    return 1 << int(exponent)


@dataclass(frozen=True)
class SupportCountReport:
    mask: int
    w: int
    s_count: int
    s_dual_count: int
    bound_main: Fraction        # expected support count, code side
    bound_main_dual: Fraction   # expected support count, dual side
    slack_log2: float
    ok: bool | None
    ok_dual: bool | None


@dataclass(frozen=True)
class SupportAudit:
    reports: list[SupportCountReport]
    all_ok: bool
    exhaustive: bool
    slack_log2: float
    slack_exact: int | None


def _count_ok(count: int, main: Fraction, slack_exact: int | None,
              slack_log2: float) -> bool | None:
    if slack_exact is not None:
        return count <= main + slack_exact
    excess = Fraction(count) - main
    if excess <= 0:
        return True
    margin = slack_log2 - (math.log2(excess.numerator) - math.log2(excess.denominator))
    if abs(margin) < INDETERMINATE_EPS:
        return None
    return margin > 0


def _sample_masks(n: int, samples_per_weight: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    masks: set[int] = set()
    for w in range(1, min(3, n) + 1):
        for combo in _combinations_masks(n, w):
            masks.add(combo)
    for w in range(4, n + 1):
        for _ in range(samples_per_weight):
            mask = 0
            for j in rng.sample(range(n), w):
                mask |= 1 << j
            masks.add(mask)
    return sorted(masks)


def _combinations_masks(n: int, w: int):
    from itertools import combinations

    for combo in combinations(range(n), w):
        mask = 0
        for j in combo:
            mask |= 1 << j
        yield mask


def audit_support_counts(code: LinearCode, ratio, subset_budget: int = 1 << 20,
                         samples_per_weight: int = 64,
                         seed: int = 0) -> SupportAudit:
    """Check, support by support, that the code and its dual carry no more
    words on any support than the expected count plus the slack term.

    All supports are audited when 2^n fits the subset budget; otherwise all
    supports of weight <= 3 plus seeded random samples per weight class.
    """
    q = code.field.q
    n, k = code.n, code.k
    slack_log2 = support_slack_log2(n, code.field.m, ratio)
    slack_exact = _exact_slack(n, code.field.m, ratio)
    dual_code = dual(code)

    exhaustive = (1 << n) <= subset_budget
    if exhaustive:
        masks = range(1, 1 << n)
    else:
        masks = _sample_masks(n, samples_per_weight, seed)

    # Support counts come from one full enumeration per side when that is
    # cheap, else from per-mask inclusion-exclusion.
    hist = hist_dual = None
    if n <= 20 and code.field.m <= 8:
        if q**k <= 1 << 16:
            hist = kernels.support_mask_counts(code.field, code.gen, n)
        if q ** (n - k) <= 1 << 16:
            hist_dual = kernels.support_mask_counts(code.field, dual_code.gen, n)

    reports = []
    all_ok = True
    for mask in masks:
        w = mask.bit_count()
        s = hist[mask] if hist is not None else count_with_support(code, mask)
        sd = (hist_dual[mask] if hist_dual is not None
              else count_with_support(dual_code, mask))
        main = Fraction((q - 1) ** w, q ** (n - k))
        main_dual = Fraction((q - 1) ** w, q**k)
        ok = _count_ok(s, main, slack_exact, slack_log2)
        ok_dual = _count_ok(sd, main_dual, slack_exact, slack_log2)
        if ok is not True or ok_dual is not True:
            all_ok = False
        reports.append(SupportCountReport(mask, w, s, sd, main, main_dual,
                                          slack_log2, ok, ok_dual))
    return SupportAudit(reports, all_ok, exhaustive, slack_log2, slack_exact)


@dataclass(frozen=True)
class ScalingFeasibility:
    """Result of the master positivity inequality guaranteeing that some
    rescaling is LCD: main term minus the two union-bound terms > 0."""

    holds: bool | None
    margin: float           # min of the two log2 ratios below
    log2_ratio_1: float     # log2(main term / first subtracted term)
    log2_ratio_2: float     # log2(main term / second subtracted term)
    exact: bool


def _safe_exp2(x: float) -> float:
    if x > 1023:
        return math.inf
    if x < -1074:
        return 0.0
    return 2.0**x


def scaling_feasibility(n: int, k: int, d: int, q_bits,
                        ratio) -> ScalingFeasibility:
    """Evaluate the existence inequality for parameters [n, k, d] over a
    field of log2-size q_bits, with genus-to-length ratio bound `ratio`.

    Exact big-integer evaluation when n <= 64 and the slack term is an
    exact power of two; otherwise the decision is made in the log2 domain
    from the two term ratios (the second ratio follows the asymptotic
    simplification used by the existence argument), and near-zero margins
    are reported as indeterminate (holds=None).
    """
    if not 1 <= d <= n:
        raise ValueError(f"d={d} out of range 1..{n}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    qb = float(q_bits)
    if d == n:
        return ScalingFeasibility(True, math.inf, math.inf, math.inf, True)

    slack_log2 = support_slack_log2(n, q_bits, ratio)
    qm1_log2 = math.log2(2.0**qb - 1.0)
    log2_ratio_1 = (n - 2 * k) * qb - n - math.log2(n - d) - slack_log2
    log2_ratio_2 = (-k * qb + d * qm1_log2 - math.log2(n - d)
                    - 3 * n - 2 - 2 * float(ratio) * n)
    margin = min(log2_ratio_1, log2_ratio_2)

    slack_exact = _exact_slack(n, q_bits, ratio) if n <= 64 else None
    if slack_exact is not None and float(q_bits) == int(q_bits):
        q = 1 << int(q_bits)
        main = Fraction((q - 1) ** n, q**k)
        term1 = (n - d) * slack_exact * 2**n * Fraction((q - 1) ** n * q**k, q**n)
        term2 = (n - d) * 2**n * slack_exact**2 * (q - 1) ** (n - d)
        return ScalingFeasibility(main - term1 - term2 > 0, margin,
                                  log2_ratio_1, log2_ratio_2, True)

    inv_sum = _safe_exp2(-log2_ratio_1) + _safe_exp2(-log2_ratio_2)
    sign = 1.0 - inv_sum
    holds = None if abs(sign) < INDETERMINATE_EPS else sign > 0
    return ScalingFeasibility(holds, margin, log2_ratio_1, log2_ratio_2, False)


@dataclass(frozen=True)
class ScalingCertificate:
    a: tuple[int, ...]
    mode: str
    iterations: int
    verified: bool


def find_lcd_scaling(code: LinearCode, mode: str = "exhaustive",
                     seed: int | None = None, max_iters: int = 1000,
                     threads: int = 1) -> ScalingCertificate:
    """Find an all-nonzero vector a with a*C LCD.

    Exhaustive mode scans (F_q^*)^n in lexicographic order and returns the
    first success, or raises NoScalingError once the space is exhausted
    (nonexistence proven).  Random mode samples candidates uniformly with
    the given seed and raises SearchInconclusiveError after max_iters
    failures.  Every returned certificate is re-verified.
    """
    q = code.field.q
    n = code.n
    if mode == "exhaustive":
        total = (q - 1) ** n
        if code.field.m <= 8 and n <= kernels.MAX_N and code.k <= kernels.MAX_K:
            idx = kernels.first_scaling_index(code.field, code.gen, n, 0, total,
                                              threads=threads)
            a = None if idx is None else kernels.scaling_by_index(q, n, idx)
            iters = total if idx is None else idx + 1
        else:
            a = None
            iters = 0
            for cand in product(code.field.nonzero(), repeat=n):
                iters += 1
                if is_lcd(scale_code(cand, code)):
                    a = cand
                    break
        if a is None:
            raise NoScalingError(
                f"all {total} scaling vectors leave the code with a nonzero hull"
            )
        if not is_lcd(scale_code(a, code)):
            raise AssertionError("certificate failed re-verification")
        return ScalingCertificate(a, "exhaustive", iters, True)

    if mode == "random":
        if seed is None:
            raise ValueError("random mode requires a seed")
        rng = random.Random(seed)
        for i in range(max_iters):
            a = tuple(rng.randrange(1, q) for _ in range(n))
            if is_lcd(scale_code(a, code)):
                return ScalingCertificate(a, "random", i + 1, True)
        raise SearchInconclusiveError(
            f"no LCD rescaling found in {max_iters} random candidates"
        )

    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class UnionAudit:
    union_size: int     # exact size of the set of bad scaling vectors
    sum_blocking: int   # sum of per-codeword bad-scaling counts (upper bound)
    total: int          # (q-1)^n
    holds: bool         # union strictly below total
    slack: int


def audit_scaling_union(code: LinearCode) -> UnionAudit:
    """Enumerate every all-nonzero vector and count how many are bad for at
    least one nonzero codeword; a good rescaling exists iff some vector is
    bad for none, i.e. iff the union is strictly smaller than (q-1)^n."""
    q = code.field.q
    n, k = code.n, code.k
    total = (q - 1) ** n
    if total > 1 << 20 or q**k > 1 << 16:
        raise EnumerationBudgetError(
            f"union audit budget exceeded: (q-1)^n = {total}, q^k = {q ** k}"
        )
    if k == 0:
        return UnionAudit(0, 0, total, True, total)

    words = [w for w in codewords(code) if weight(w)]
    union = kernels.union_direct(code.field, code.gen, n, words)

    if n <= 20 and code.field.m <= 8:
        hist = kernels.support_mask_counts(code.field, code.gen, n)
        hist_dual = kernels.support_mask_counts(code.field, dual(code).gen, n)
        sum_blocking = sum(
            hist[mask] * (q - 1) ** (n - mask.bit_count()) * hist_dual[mask]
            for mask in range(1, 1 << n) if hist[mask]
        )
    else:
        sum_blocking = sum(count_blocking_scalings(code, u) for u in words)

    return UnionAudit(union, sum_blocking, total, union < total, total - union)
