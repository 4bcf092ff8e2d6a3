"""Pure-Python enumeration kernels.

Fallback implementation of the hot loops; `lcdcodes._core` is the compiled
twin with identical signatures and identical results.  All functions work
on flat buffers of small ints:

  gen   -- generator matrix, row-major, length k*n
  mul   -- flat q*q field multiplication table
  inv   -- flat inverse table of length q (index 0 unused)
  words -- list of codewords, row-major, length nwords*n

Message enumeration order: message index msg encodes base-q digits, digit
i (the coefficient of generator row i) = (msg // q^i) % q, so digit 0
varies fastest.  Scaling-vector enumeration order: index idx encodes the
vector a with a[i] = 1 + (idx // (q-1)^(n-1-i)) % (q-1), i.e. plain
lexicographic order on tuples (the last coordinate varies fastest).
"""

from __future__ import annotations


def min_weight(k: int, n: int, q: int, gen, mul, lo: int, hi: int) -> int:
    """Minimum Hamming weight over codewords of messages lo..hi-1 (lo >= 1)."""
    digits = [0] * k
    msg = lo
    for i in range(k):
        digits[i] = (lo // q**i) % q
    cur = [0] * n
    for i in range(k):
        d = digits[i]
        if d:
            base = i * n
            drow = d * q
            for j in range(n):
                cur[j] ^= mul[drow + gen[base + j]]
    best = n + 1
    while True:
        w = 0
        for j in range(n):
            if cur[j]:
                w += 1
        if w < best:
            best = w
        msg += 1
        if msg >= hi:
            return best
        pos = 0
        while True:
            old = digits[pos]
            new = old + 1
            if new == q:
                new = 0
            digits[pos] = new
            base = pos * n
            orow = old * q
            nrow = new * q
            for j in range(n):
                g = gen[base + j]
                cur[j] ^= mul[orow + g] ^ mul[nrow + g]
            if new != 0:
                break
            pos += 1


def support_histogram(k: int, n: int, q: int, gen, mul, out) -> None:
    """Tally support bitmasks of all q^k codewords into out (length 2^n)."""
    digits = [0] * k
    cur = [0] * n
    total = q**k
    msg = 0
    while True:
        mask = 0
        for j in range(n):
            if cur[j]:
                mask |= 1 << j
        out[mask] += 1
        msg += 1
        if msg >= total:
            return
        pos = 0
        while True:
            old = digits[pos]
            new = old + 1
            if new == q:
                new = 0
            digits[pos] = new
            base = pos * n
            orow = old * q
            nrow = new * q
            for j in range(n):
                g = gen[base + j]
                cur[j] ^= mul[orow + g] ^ mul[nrow + g]
            if new != 0:
                break
            pos += 1


def count_blocking(k: int, n: int, q: int, gen, mul, u) -> int:
    """Count vectors v in (F_q^*)^n whose squared rescaling of u lies in the
    kernel of gen (i.e. is orthogonal to every generator row)."""
    qm1 = q - 1
    digits = [0] * n
    x = [mul[u[j] * q + 1] for j in range(n)]  # v = all-ones to start
    count = 0
    total = qm1**n
    idx = 0
    while True:
        ok = True
        for i in range(k):
            acc = 0
            base = i * n
            for j in range(n):
                acc ^= mul[gen[base + j] * q + x[j]]
            if acc:
                ok = False
                break
        if ok:
            count += 1
        idx += 1
        if idx >= total:
            return count
        pos = n - 1
        while True:
            new = digits[pos] + 1
            if new == qm1:
                new = 0
            digits[pos] = new
            v = new + 1
            x[pos] = mul[mul[v * q + v] * q + u[pos]]
            if new != 0:
                break
            pos -= 1


def union_count(k: int, n: int, q: int, gen, mul, words, nwords: int) -> int:
    """Count vectors v in (F_q^*)^n for which some listed word, squared-
    rescaled by v, is orthogonal to every generator row."""
    qm1 = q - 1
    digits = [0] * n
    sq = [1] * n
    count = 0
    total = qm1**n
    idx = 0
    while True:
        hit = False
        for t in range(nwords):
            wbase = t * n
            ok = True
            for i in range(k):
                acc = 0
                base = i * n
                for j in range(n):
                    acc ^= mul[gen[base + j] * q + mul[sq[j] * q + words[wbase + j]]]
                if acc:
                    ok = False
                    break
            if ok:
                hit = True
                break
        if hit:
            count += 1
        idx += 1
        if idx >= total:
            return count
        pos = n - 1
        while True:
            new = digits[pos] + 1
            if new == qm1:
                new = 0
            digits[pos] = new
            v = new + 1
            sq[pos] = mul[v * q + v]
            if new != 0:
                break
            pos -= 1


def scan_scaling(k: int, n: int, q: int, gen, mul, inv, start: int, stop: int) -> int:
    """First index in [start, stop) of a scaling vector a making the rescaled
    code LCD (Gram matrix of a*G has full rank), or -1 if none."""
    if k == 0:
        return start if start < stop else -1
    qm1 = q - 1
    # pair products of generator rows, one n-vector per unordered row pair
    npairs = k * (k + 1) // 2
    pp = [0] * (npairs * n)
    t = 0
    for i in range(k):
        for l in range(i, k):
            bi = i * n
            bl = l * n
            bt = t * n
            for j in range(n):
                pp[bt + j] = mul[gen[bi + j] * q + gen[bl + j]]
            t += 1
    digits = [0] * n
    sq = [1] * n
    idx = start
    for i in range(n):
        digits[i] = (start // qm1 ** (n - 1 - i)) % qm1
        v = digits[i] + 1
        sq[i] = mul[v * q + v]
    gm = [0] * (k * k)
    while idx < stop:
        t = 0
        for i in range(k):
            for l in range(i, k):
                bt = t * n
                acc = 0
                for j in range(n):
                    acc ^= mul[sq[j] * q + pp[bt + j]]
                gm[i * k + l] = acc
                gm[l * k + i] = acc
                t += 1
        if _full_rank(k, q, gm, mul, inv):
            return idx
        idx += 1
        if idx >= stop:
            return -1
        pos = n - 1
        while True:
            new = digits[pos] + 1
            if new == qm1:
                new = 0
            digits[pos] = new
            v = new + 1
            sq[pos] = mul[v * q + v]
            if new != 0:
                break
            pos -= 1
    return -1


def _full_rank(k: int, q: int, gm, mul, inv) -> bool:
    """Destructive Gaussian elimination rank test on a k x k matrix copy."""
    m = list(gm)
    r = 0
    for c in range(k):
        piv = -1
        for i in range(r, k):
            if m[i * k + c]:
                piv = i
                break
        if piv < 0:
            return False
        if piv != r:
            for j in range(k):
                m[piv * k + j], m[r * k + j] = m[r * k + j], m[piv * k + j]
        lead = m[r * k + c]
        if lead != 1:
            il = inv[lead]
            for j in range(k):
                m[r * k + j] = mul[il * q + m[r * k + j]]
        for i in range(k):
            if i != r and m[i * k + c]:
                f = m[i * k + c]
                for j in range(k):
                    m[i * k + j] ^= mul[f * q + m[r * k + j]]
        r += 1
        if r == k:
            return True
    return r == k
