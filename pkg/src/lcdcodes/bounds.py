"""Asymptotic rate/distance bound calculus for q-ary codes, q a power of 2.

Two benchmark curves in the (relative distance, rate) plane:

  * the Gilbert-Varshamov rate 1 - H_q(delta), with H_q the q-ary entropy
    (all three logarithms base q, so H_q(1 - 1/q) = 1);
  * the tower rate 1 - lambda - delta, where lambda is the best known
    genus-to-rational-points ratio over F_q in even characteristic (kept
    as an exact rational end to end: 1/(sqrt(q)-1) when the exponent of q
    is even, a rational expression when it is odd).

On top of these sit the admissible rate windows for the LCD rescaling
construction, the pair of feasibility margins it needs, and the scan for
the delta-intervals where certified LCD codes beat the GV rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _exponent_of_two(q: int) -> int:
    if q < 2 or q & (q - 1):
        raise ValueError(f"q={q} is not a power of 2")
    return q.bit_length() - 1


def entropy(q: int, x: float) -> float:
    """q-ary entropy on [0, 1 - 1/q]; 0 at 0, strictly increasing, 1 at the
    right endpoint."""
    if q < 2:
        raise ValueError(f"alphabet size q={q} must be >= 2")
    hi = 1.0 - 1.0 / q
    if not 0.0 <= x <= hi:
        raise ValueError(f"x={x} outside [0, {hi}]")
    if x == 0.0:
        return 0.0
    lq = math.log2(q)
    h = x * math.log2(q - 1) - x * math.log2(x)
    if x < 1.0:
        h -= (1.0 - x) * math.log2(1.0 - x)
    return h / lq


def best_genus_ratio(q: int) -> Fraction:
    """Smallest known genus-to-places ratio over F_q (even characteristic),
    as an exact rational.  Defined for q = 2^e with e >= 2."""
    e = _exponent_of_two(q)
    if e < 2:
        raise ValueError("no tower family is defined for q = 2")
    r = e // 2
    if e % 2 == 0:
        return Fraction(1, 2**r - 1)
    return Fraction(3 * (2**r - 1) + 1, 2 * (2 ** (r + 1) - 1) * (2**r - 1))


def _check_delta(q: int, delta: float) -> None:
    if not 0.0 < delta < 1.0 - 1.0 / q:
        raise ValueError(f"delta={delta} outside (0, {1.0 - 1.0 / q})")


def gv_rate(q: int, delta: float) -> float:
    _check_delta(q, delta)
    return 1.0 - entropy(q, delta)


def tv_rate(q: int, delta: float) -> float:
    _check_delta(q, delta)
    return 1.0 - float(best_genus_ratio(q)) - delta


def rate_margins(q: int, rate: float, delta: float, ratio) -> tuple[float, float]:
    """The two feasibility margins of the LCD rescaling construction at
    rate R and relative distance delta; both must be positive:

        (1 - 2R - ratio) * log2(q) - 2
        delta * log2(q-1) - R * log2(q) - 3 - 2*ratio
    """
    lam = float(ratio)
    m1 = (1.0 - 2.0 * rate - lam) * math.log2(q) - 2.0
    m2 = delta * math.log2(q - 1) - rate * math.log2(q) - 3.0 - 2.0 * lam
    return m1, m2


def rate_windows(q: int) -> tuple[tuple[float, float] | None,
                                  tuple[float, float] | None]:
    """Admissible rate windows for the construction and for its dual form.

    Window 1 is (2*lambda, min(b1, b2)) with
      b1 = (1 - lambda - 2/log2(q)) / 2
      b2 = (log2(q-1) - (1 + log2(q-1))*lambda - 3) / log2(q*(q-1))
    and window 2 is its reflection (1 - min(b1, b2), 1 - 2*lambda).
    Either may be empty, reported as None.
    """
    lam = best_genus_ratio(q)
    lam_f = float(lam)
    lq = math.log2(q)
    lqm1 = math.log2(q - 1)
    b1 = (1.0 - lam_f - 2.0 / lq) / 2.0
    b2 = (lqm1 - (1.0 + lqm1) * lam_f - 3.0) / (lq + lqm1)
    upper = min(b1, b2)
    lo1, hi1 = 2.0 * lam_f, upper
    win1 = (lo1, hi1) if lo1 < hi1 else None
    lo2, hi2 = 1.0 - upper, 1.0 - 2.0 * lam_f
    win2 = (lo2, hi2) if lo2 < hi2 else None
    return win1, win2


@dataclass(frozen=True)
class TowerParams:
    tower: str                 # "first" | "second"
    q: int
    t: int | None              # tower level, when a finite bound is available
    n_lower: int | None        # lower bound on the number of rational places
    ratio_limit: Fraction      # limiting places-to-genus ratio


def tower_params(tower: str, q: int, t: int | None = None) -> TowerParams:
    """Numeric parameters of the two towers of function fields with many
    rational places; the reciprocal of the limiting ratio equals
    best_genus_ratio(q) exactly."""
    e = _exponent_of_two(q)
    if tower == "first":
        if e < 2 or e % 2:
            raise ValueError(
                f"first tower requires q an even power of 2 in even characteristic, got q={q}"
            )
        r = 1 << (e // 2)
        n_lower = None
        if t is not None:
            if t < 1:
                raise ValueError(f"tower level t={t} must be >= 1")
            n_lower = r ** (t - 1) * (q - 1) + 1
        return TowerParams("first", q, t, n_lower, Fraction(r - 1))
    if tower == "second":
        if e < 3 or e % 2 == 0:
            raise ValueError(
                f"second tower requires q an odd power of 2 with exponent >= 3, got q={q}"
            )
        if t is not None:
            raise ValueError("the second tower provides only a limiting ratio")
        m = (e - 1) // 2
        ratio = Fraction(2 * (2 ** (m + 1) - 1) * (2**m - 1), 3 * (2**m - 1) + 1)
        return TowerParams("second", q, None, None, ratio)
    raise ValueError(f"unknown tower {tower!r}")


@dataclass(frozen=True)
class BoundProfile:
    q: int
    genus_ratio: Fraction
    grid: list[tuple[float, float, float, bool, bool]]
    crossover_1: tuple[float, float] | None
    crossover_2: tuple[float, float] | None


def bound_grid(q: int, points: int = 10000) -> list[tuple[float, float, float, bool, bool]]:
    """(delta, gv_rate, tv_rate, in_window_1, in_window_2) on an interior
    grid of the distance range."""
    win1, win2 = rate_windows(q)
    hi = 1.0 - 1.0 / q
    rows = []
    for i in range(1, points + 1):
        d = hi * i / (points + 1)
        tv = tv_rate(q, d)
        rows.append((
            d,
            gv_rate(q, d),
            tv,
            bool(win1 and win1[0] < tv < win1[1]),
            bool(win2 and win2[0] < tv < win2[1]),
        ))
    return rows


def _certified(q: int, delta: float, window: int,
               win: tuple[float, float] | None, lam: Fraction) -> bool:
    """True when the tower rate beats GV at delta AND the construction is
    fully certified there: the rate sits in the window and the feasibility
    margins are positive (for window 2 via the dual code's parameters)."""
    if win is None:
        return False
    try:
        rate = tv_rate(q, delta)
        if not win[0] < rate < win[1]:
            return False
        if rate <= gv_rate(q, delta):
            return False
        if window == 1:
            m1, m2 = rate_margins(q, rate, delta, lam)
        else:
            dual_rate = 1.0 - rate
            dual_delta = rate - float(lam)
            if not 0.0 < dual_delta < 1.0 - 1.0 / q:
                return False
            m1, m2 = rate_margins(q, dual_rate, dual_delta, lam)
        return m1 > 0.0 and m2 > 0.0
    except ValueError:
        return False


def _bisect_edge(q: int, window: int, win, lam, lo: float, hi: float,
                 want_upper: bool, precision: float) -> float:
    """Boundary of the certified region between a certified and an
    uncertified point."""
    while hi - lo > precision:
        mid = (lo + hi) / 2.0
        inside = _certified(q, mid, window, win, lam)
        if inside == want_upper:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def crossover_intervals(q: int, precision: float = 1e-6,
                        grid: int = 10000) -> BoundProfile:
    """Scan for the delta-intervals where certified LCD rescalings of AG
    codes exceed the GV rate: one interval per rate window, either may be
    empty."""
    lam = best_genus_ratio(q)
    win1, win2 = rate_windows(q)
    hi = 1.0 - 1.0 / q
    deltas = [hi * i / (grid + 1) for i in range(1, grid + 1)]
    intervals: list[tuple[float, float] | None] = []
    for window, win in ((1, win1), (2, win2)):
        flags = [_certified(q, d, window, win, lam) for d in deltas]
        runs = []
        start = None
        for i, f in enumerate(flags):
            if f and start is None:
                start = i
            elif not f and start is not None:
                runs.append((start, i - 1))
                start = None
        if start is not None:
            runs.append((start, len(flags) - 1))
        if not runs:
            intervals.append(None)
            continue
        first, last = max(runs, key=lambda ab: ab[1] - ab[0])
        lo = deltas[first]
        if first > 0:
            lo = _bisect_edge(q, window, win, lam, deltas[first - 1],
                              deltas[first], False, precision)
        hi_edge = deltas[last]
        if last + 1 < len(deltas):
            hi_edge = _bisect_edge(q, window, win, lam, deltas[last],
                                   deltas[last + 1], True, precision)
        intervals.append((lo, hi_edge))
    return BoundProfile(q, lam, bound_grid(q, grid), intervals[0], intervals[1])
