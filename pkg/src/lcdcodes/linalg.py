"""Row-reduction linear algebra over GF(2^m).

Matrices are sequences of equal-length rows; a row is a sequence of field
elements (ints).  Everything works in characteristic 2, so row subtraction
is XOR of scaled rows.  Reduced row echelon form is the canonical
representative of a row space, which makes subspace equality decidable by
tuple comparison.
"""

from __future__ import annotations

from .gf2m import GF2m

Row = tuple[int, ...]


def rref(field: GF2m, rows, ncols: int) -> tuple[list[Row], tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise ValueError(f"row length {len(r)} != {ncols}")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            ilead = field.inv(lead)
            m[r] = [field.mul(ilead, e) for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a ^ field.mul(f, b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], tuple(pivots)


def rank(field: GF2m, rows, ncols: int) -> int:
    return len(rref(field, rows, ncols)[0])


def right_kernel(field: GF2m, rows, ncols: int) -> list[Row]:
    """Canonical basis of {x : M x = 0}; len(result) = ncols - rank(M)."""
    reduced, pivots = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = reduced[i][fc]  # char 2: -x = x
        basis.append(tuple(v))
    canonical, _ = rref(field, basis, ncols)
    return canonical


def mat_mul(field: GF2m, a, b) -> list[Row]:
    """Product of a (r x s) and b (s x t)."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a[0])} vs {len(b)}")
    t = len(b[0]) if b else 0
    out = []
    for arow in a:
        acc = [0] * t
        for aik, brow in zip(arow, b):
            if aik:
                for j, bkj in enumerate(brow):
                    if bkj:
                        acc[j] ^= field.mul(aik, bkj)
        out.append(tuple(acc))
    return out


def gram(field: GF2m, rows) -> list[Row]:
    """G * G^T for a matrix given by its rows."""
    out = []
    for u in rows:
        line = []
        for v in rows:
            acc = 0
            for a, b in zip(u, v):
                if a and b:
                    acc ^= field.mul(a, b)
            line.append(acc)
        out.append(tuple(line))
    return out
