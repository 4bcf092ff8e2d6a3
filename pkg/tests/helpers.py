"""Shared test utilities: exhaustive code enumeration and slow oracles."""

from itertools import combinations, product

from lcdcodes.codes import LinearCode
from lcdcodes.gf2m import GF2m


def all_codes(field: GF2m, n: int, k: int) -> list[LinearCode]:
    """Every k-dimensional code of length n, one canonical generator each
    (direct enumeration of reduced-row-echelon matrices)."""
    if k == 0:
        return [LinearCode(field, n, ())]
    found = []
    for pivots in combinations(range(n), k):
        free = [(i, c) for i in range(k) for c in range(n)
                if c not in pivots and c > pivots[i]]
        for vals in product(field.elements(), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(free, vals):
                rows[i][c] = v
            found.append(LinearCode(field, n, tuple(tuple(r) for r in rows)))
    return found


def blocking_count_oracle(code: LinearCode, u) -> int:
    """Direct enumeration of (F_q^*)^n for the per-codeword bad-scaling count."""
    f = code.field
    count = 0
    for v in product(f.nonzero(), repeat=code.n):
        x = [f.mul(f.mul(a, a), b) for a, b in zip(v, u)]
        if all(_dot_zero(f, row, x) for row in code.gen):
            count += 1
    return count


def union_oracle(code: LinearCode) -> int:
    """Direct enumeration of the union of bad scaling vectors."""
    from lcdcodes.codes import codewords, weight

    f = code.field
    words = [w for w in codewords(code) if weight(w)]
    count = 0
    for v in product(f.nonzero(), repeat=code.n):
        sq = [f.mul(a, a) for a in v]
        for w in words:
            x = [f.mul(s, b) for s, b in zip(sq, w)]
            if all(_dot_zero(f, row, x) for row in code.gen):
                count += 1
                break
    return count


def _dot_zero(f: GF2m, row, x) -> bool:
    acc = 0
    for a, b in zip(row, x):
        if a and b:
            acc ^= f.mul(a, b)
    return acc == 0
