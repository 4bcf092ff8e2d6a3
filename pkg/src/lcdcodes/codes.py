"""Linear codes over GF(2^m).

A code is stored by the reduced row echelon form of a full-row-rank
generator matrix, so two `LinearCode` values are equal exactly when they
are the same subspace.  The zero code (k = 0) is a valid code and is LCD
by convention.

Minimum distance is exact-only: the whole message space is enumerated and
a request beyond the enumeration budget is refused rather than
approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernels, linalg
from .gf2m import GF2m, element_hex, parse_element

DEFAULT_DISTANCE_BUDGET = 1 << 24


class RankDeficientError(ValueError):
    """Generator rows do not have full row rank."""


class EnumerationBudgetError(RuntimeError):
    """Exact enumeration would exceed the allowed budget."""


class CodeFormatError(ValueError):
    """Malformed code file."""


@dataclass(frozen=True)
class LinearCode:
    field: GF2m
    n: int
    gen: tuple[tuple[int, ...], ...]  # reduced row echelon, full row rank

    @property
    def k(self) -> int:
        return len(self.gen)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"


def from_spanning(field: GF2m, n: int, rows) -> LinearCode:
    """Code spanned by the given rows (any rank)."""
    if n < 1:
        raise ValueError("code length must be >= 1")
    reduced, _ = linalg.rref(field, rows, n)
    return LinearCode(field, n, tuple(reduced))


def from_generator(field: GF2m, n: int, rows) -> LinearCode:
    """Code with the given generator matrix; rejects rank-deficient input."""
    rows = [tuple(r) for r in rows]
    code = from_spanning(field, n, rows)
    if code.k != len(rows):
        raise RankDeficientError(
            f"generator has {len(rows)} rows but rank {code.k}"
        )
    return code


def zero_code(field: GF2m, n: int) -> LinearCode:
    return LinearCode(field, n, ())


def full_space(field: GF2m, n: int) -> LinearCode:
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return LinearCode(field, n, ident)


def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual, computed as the kernel of the generator matrix."""
    basis = linalg.right_kernel(code.field, code.gen, code.n)
    return LinearCode(code.field, code.n, tuple(basis))


def hull_dimension(code: LinearCode) -> int:
    """Dimension of the intersection of the code with its dual.

    Fast path: k - rank(G G^T).  Under __debug__ the result is
    cross-checked against the intersection computed from stacked bases.
    """
    if code.k == 0:
        return 0
    g = linalg.gram(code.field, code.gen)
    dim = code.k - linalg.rank(code.field, g, code.k)
    if __debug__:
        stacked = list(code.gen) + list(dual(code).gen)
        by_intersection = code.n - linalg.rank(code.field, stacked, code.n)
        assert dim == by_intersection, (
            f"hull mismatch: Gram path {dim}, intersection path {by_intersection}"
        )
    return dim


def is_lcd(code: LinearCode) -> bool:
    return hull_dimension(code) == 0


def weight(v) -> int:
    return sum(1 for a in v if a)


def support(v) -> int:
    """Support of a vector as a bitmask (bit j <-> coordinate j)."""
    mask = 0
    for j, a in enumerate(v):
        if a:
            mask |= 1 << j
    return mask


def encode(code: LinearCode, msg) -> tuple[int, ...]:
    f = code.field
    acc = [0] * code.n
    for d, row in zip(msg, code.gen):
        if d:
            for j, g in enumerate(row):
                if g:
                    acc[j] ^= f.mul(d, g)
    return tuple(acc)


def codewords(code: LinearCode) -> Iterator[tuple[int, ...]]:
    """All q^k codewords, in message order (first digit varies fastest)."""
    q = code.field.q
    total = q**code.k
    msg = [0] * code.k
    for _ in range(total):
        yield encode(code, msg)
        for i in range(code.k):
            msg[i] += 1
            if msg[i] < q:
                break
            msg[i] = 0


def contains(code: LinearCode, v) -> bool:
    if len(v) != code.n:
        return False
    stacked = list(code.gen) + [tuple(v)]
    return linalg.rank(code.field, stacked, code.n) == code.k


def min_distance(code: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET,
                 threads: int = 1) -> int:
    """Exact minimum distance by exhaustive message enumeration."""
    if code.k < 1:
        raise ValueError("minimum distance is undefined for the zero code")
    total = code.field.q**code.k
    if total > budget:
        raise EnumerationBudgetError(
            f"q^k = {total} exceeds the enumeration budget {budget}"
        )
    if code.field.m <= 8 and code.n <= kernels.MAX_N and code.k <= kernels.MAX_K:
        return kernels.exhaustive_min_weight(code.field, code.gen, code.n,
                                             threads=threads)
    best = code.n + 1
    for w in codewords(code):
        x = weight(w)
        if 0 < x < best:
            best = x
    return best


def scale_code(a, code: LinearCode) -> LinearCode:
    """Coordinatewise rescaling by an all-nonzero vector; an equivalent code."""
    if len(a) != code.n:
        raise ValueError(f"scaling vector length {len(a)} != {code.n}")
    if any(x == 0 for x in a):
        raise ZeroDivisionError("scaling vector has a zero coordinate")
    f = code.field
    rows = [tuple(f.mul(ai, g) for ai, g in zip(a, row)) for row in code.gen]
    return from_spanning(f, code.n, rows)


def count_supported_within(code: LinearCode, mask: int) -> int:
    """Number of codewords whose support is contained in the mask,
    computed from the rank of the generator columns outside the mask."""
    outside = [j for j in range(code.n) if not (mask >> j) & 1]
    if code.k == 0:
        return 1
    cols = [tuple(row[j] for j in outside) for row in code.gen]
    r = linalg.rank(code.field, cols, len(outside))
    return code.field.q ** (code.k - r)


def puncture(code: LinearCode, keep) -> LinearCode:
    """Restriction of the code to the listed coordinates (rank may drop)."""
    keep = list(keep)
    rows = [tuple(row[j] for j in keep) for row in code.gen]
    return from_spanning(code.field, len(keep), rows)


# -- plain-text code file format ---------------------------------------------
#
#   line 1: GF2M m=<m> mod=0x<hex>
#   line 2: CODE n=<n> k=<k>
#   lines 3..k+2: n space-separated hex field elements (a generator row)


def to_text(code: LinearCode) -> str:
    lines = [code.field.serialize(), f"CODE n={code.n} k={code.k}"]
    for row in code.gen:
        lines.append(" ".join(element_hex(a) for a in row))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> LinearCode:
    lines = text.splitlines()
    if len(lines) < 2:
        raise CodeFormatError("expected a field header and a CODE header")
    field = GF2m.parse(lines[0])
    parts = lines[1].split()
    if len(parts) != 3 or parts[0] != "CODE":
        raise CodeFormatError(f"bad CODE header: {lines[1]!r}")
    try:
        hdr = dict(p.split("=", 1) for p in parts[1:])
        n = int(hdr["n"])
        k = int(hdr["k"])
    except (KeyError, ValueError) as exc:
        raise CodeFormatError(f"bad CODE header: {lines[1]!r}") from exc
    if n < 1 or k < 0:
        raise CodeFormatError(f"bad dimensions n={n} k={k}")
    body = lines[2:]
    if len([ln for ln in body if ln.strip()]) != k:
        raise CodeFormatError(f"expected {k} generator rows, found "
                              f"{len([ln for ln in body if ln.strip()])}")
    rows = []
    for ln in body:
        if not ln.strip():
            continue
        toks = ln.split()
        if len(toks) != n:
            raise CodeFormatError(f"row has {len(toks)} elements, expected {n}")
        rows.append(tuple(parse_element(field, t) for t in toks))
    return from_generator(field, n, rows)


def write_code_file(code: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_text(code))


def parse_code_file(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())
