"""Backend selection and marshalling for the enumeration kernels.

The compiled extension (`lcdcodes._core`) is used when importable; the
pure-Python twin (`lcdcodes._core_py`) otherwise.  Set the environment
variable ``LCDCODES_PURE=1`` to force the fallback.  Both backends are
result-identical; ``BACKEND`` names the one in use.

Kernel caps: k <= 32 rows, n <= 256 columns, field tables require m <= 8.
Work ranges can be partitioned across threads; results are independent of
the partitioning.
"""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ThreadPoolExecutor

from .gf2m import GF2m

if os.environ.get("LCDCODES_PURE"):
    from . import _core_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as _impl

        BACKEND = "pure"

MAX_K = 32
MAX_N = 256


def _flat(rows) -> array:
    out = array("H")
    for r in rows:
        out.extend(r)
    return out


def _check_dims(k: int, n: int, field: GF2m, histogram: bool = False) -> None:
    if field.m > 8:
        raise ValueError("enumeration kernels require m <= 8 (q <= 256)")
    if k > MAX_K:
        raise ValueError(f"kernel cap exceeded: k={k} > {MAX_K}")
    cap = 20 if histogram else MAX_N
    if not 1 <= n <= cap:
        raise ValueError(f"kernel cap exceeded: n={n} not in 1..{cap}")


def _ranges(lo: int, hi: int, parts: int):
    span = hi - lo
    parts = max(1, min(parts, span))
    step = span // parts
    bounds = [lo + i * step for i in range(parts)] + [hi]
    return [(bounds[i], bounds[i + 1]) for i in range(parts)]


def exhaustive_min_weight(field: GF2m, rows, n: int, lo: int = 1,
                          hi: int | None = None, threads: int = 1) -> int:
    """Minimum weight over the codewords of messages lo..hi-1 (lo >= 1)."""
    k = len(rows)
    _check_dims(k, n, field)
    if hi is None:
        hi = field.q**k
    gen = _flat(rows)
    mul = field.mul_table()
    if threads <= 1:
        return _impl.min_weight(k, n, field.q, gen, mul, lo, hi)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(_impl.min_weight, k, n, field.q, gen, mul, a, b)
                for a, b in _ranges(lo, hi, threads)]
        return min(f.result() for f in futs)


def support_mask_counts(field: GF2m, rows, n: int) -> list[int]:
    """Counts of codeword support bitmasks over all q^k messages.

    Bit j of a mask corresponds to coordinate j.  Requires n <= 20.
    """
    k = len(rows)
    if k > MAX_K or field.m > 8 or not 1 <= n <= 20:
        raise ValueError("support histogram caps: k <= 32, n <= 20, m <= 8")
    out = array("q", bytes(8 * (1 << n)))
    _impl.support_histogram(k, n, field.q, _flat(rows), field.mul_table(), out)
    return list(out)


def count_blocking_direct(field: GF2m, rows, n: int, u) -> int:
    """Direct count over (F_q^*)^n of vectors whose squared rescaling of u
    is orthogonal to every row."""
    k = len(rows)
    _check_dims(k, n, field)
    return _impl.count_blocking(k, n, field.q, _flat(rows), field.mul_table(),
                                array("H", u))


def union_direct(field: GF2m, rows, n: int, words) -> int:
    """Direct count over (F_q^*)^n of vectors for which at least one of the
    listed words, squared-rescaled, is orthogonal to every row."""
    k = len(rows)
    _check_dims(k, n, field)
    if not words:
        return 0
    return _impl.union_count(k, n, field.q, _flat(rows), field.mul_table(),
                             _flat(words), len(words))


def scaling_count(q: int, n: int) -> int:
    return (q - 1) ** n


def scaling_by_index(q: int, n: int, idx: int) -> tuple[int, ...]:
    """idx-th all-nonzero vector in lexicographic order (last coordinate
    varies fastest)."""
    digits = []
    for _ in range(n):
        digits.append(1 + idx % (q - 1))
        idx //= q - 1
    return tuple(reversed(digits))


def first_scaling_index(field: GF2m, rows, n: int, start: int, stop: int,
                        threads: int = 1) -> int | None:
    """Index of the first scaling vector in [start, stop) whose rescaled
    code is LCD, or None.  With threads > 1 the range is chunked; chunks
    are examined in order so the first hit is still returned."""
    k = len(rows)
    _check_dims(k, n, field)
    gen = _flat(rows)
    mul = field.mul_table()
    inv = field.inv_table()
    if threads <= 1:
        r = _impl.scan_scaling(k, n, field.q, gen, mul, inv, start, stop)
        return None if r < 0 else r
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(_impl.scan_scaling, k, n, field.q, gen, mul, inv, a, b)
                for a, b in _ranges(start, stop, 4 * threads)]
        for f in futs:
            r = f.result()
            if r >= 0:
                return r
    return None
