# Compiled enumeration kernels.  Must stay result-identical to the pure
# fallback in _core_py.py; see that module for the buffer layouts and the
# message / scaling-vector enumeration orders.

from libc.stdlib cimport malloc, free

DEF MAX_K = 32
DEF MAX_N = 256


def min_weight(int k, int n, int q, unsigned short[::1] gen,
               unsigned short[::1] mul, unsigned long long lo,
               unsigned long long hi):
    cdef int digits[MAX_K]
    cdef unsigned short cur[MAX_N]
    cdef int i, j, w, pos, old, new, best
    cdef unsigned long long msg, t
    cdef unsigned short g
    if k <= 0 or k > MAX_K or n <= 0 or n > MAX_N:
        raise ValueError("kernel caps: 1 <= k <= 32, 1 <= n <= 256")
    t = lo
    for i in range(k):
        digits[i] = t % q
        t //= q
    with nogil:
        for j in range(n):
            cur[j] = 0
        for i in range(k):
            if digits[i]:
                for j in range(n):
                    cur[j] ^= mul[digits[i] * q + gen[i * n + j]]
        best = n + 1
        msg = lo
        while True:
            w = 0
            for j in range(n):
                if cur[j]:
                    w += 1
            if w < best:
                best = w
            msg += 1
            if msg >= hi:
                break
            pos = 0
            while True:
                old = digits[pos]
                new = old + 1
                if new == q:
                    new = 0
                digits[pos] = new
                for j in range(n):
                    g = gen[pos * n + j]
                    cur[j] ^= mul[old * q + g] ^ mul[new * q + g]
                if new != 0:
                    break
                pos += 1
    return best


def support_histogram(int k, int n, int q, unsigned short[::1] gen,
                      unsigned short[::1] mul, long long[::1] out):
    cdef int digits[MAX_K]
    cdef unsigned short cur[MAX_N]
    cdef int i, j, pos, old, new
    cdef unsigned long long msg, total, mask
    cdef unsigned short g
    if k < 0 or k > MAX_K or n <= 0 or n > 20:
        raise ValueError("kernel caps: 0 <= k <= 32, 1 <= n <= 20")
    total = 1
    for i in range(k):
        total *= q
        digits[i] = 0
    with nogil:
        for j in range(n):
            cur[j] = 0
        msg = 0
        while True:
            mask = 0
            for j in range(n):
                if cur[j]:
                    mask |= (<unsigned long long>1) << j
            out[mask] += 1
            msg += 1
            if msg >= total:
                break
            pos = 0
            while True:
                old = digits[pos]
                new = old + 1
                if new == q:
                    new = 0
                digits[pos] = new
                for j in range(n):
                    g = gen[pos * n + j]
                    cur[j] ^= mul[old * q + g] ^ mul[new * q + g]
                if new != 0:
                    break
                pos += 1


def count_blocking(int k, int n, int q, unsigned short[::1] gen,
                   unsigned short[::1] mul, unsigned short[::1] u):
    cdef int digits[MAX_N]
    cdef unsigned short x[MAX_N]
    cdef int i, j, pos, new, v
    cdef unsigned short acc
    cdef bint ok
    cdef unsigned long long count, total, idx
    if k <= 0 or k > MAX_K or n <= 0 or n > MAX_N:
        raise ValueError("kernel caps: 1 <= k <= 32, 1 <= n <= 256")
    total = 1
    for j in range(n):
        total *= q - 1
        digits[j] = 0
    with nogil:
        for j in range(n):
            x[j] = mul[u[j] * q + 1]
        count = 0
        idx = 0
        while True:
            ok = True
            for i in range(k):
                acc = 0
                for j in range(n):
                    acc ^= mul[gen[i * n + j] * q + x[j]]
                if acc:
                    ok = False
                    break
            if ok:
                count += 1
            idx += 1
            if idx >= total:
                break
            pos = n - 1
            while True:
                new = digits[pos] + 1
                if new == q - 1:
                    new = 0
                digits[pos] = new
                v = new + 1
                x[pos] = mul[mul[v * q + v] * q + u[pos]]
                if new != 0:
                    break
                pos -= 1
    return count


def union_count(int k, int n, int q, unsigned short[::1] gen,
                unsigned short[::1] mul, unsigned short[::1] words,
                int nwords):
    cdef int digits[MAX_N]
    cdef unsigned short sq[MAX_N]
    cdef int i, j, t, pos, new, v
    cdef unsigned short acc
    cdef bint ok, hit
    cdef unsigned long long count, total, idx
    if k <= 0 or k > MAX_K or n <= 0 or n > MAX_N:
        raise ValueError("kernel caps: 1 <= k <= 32, 1 <= n <= 256")
    total = 1
    for j in range(n):
        total *= q - 1
        digits[j] = 0
        sq[j] = 1
    with nogil:
        count = 0
        idx = 0
        while True:
            hit = False
            for t in range(nwords):
                ok = True
                for i in range(k):
                    acc = 0
                    for j in range(n):
                        acc ^= mul[gen[i * n + j] * q + mul[sq[j] * q + words[t * n + j]]]
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
                break
            pos = n - 1
            while True:
                new = digits[pos] + 1
                if new == q - 1:
                    new = 0
                digits[pos] = new
                v = new + 1
                sq[pos] = mul[v * q + v]
                if new != 0:
                    break
                pos -= 1
    return count


cdef bint _full_rank(int k, int q, unsigned short* gm, unsigned short* work,
                     unsigned short[::1] mul, unsigned short[::1] inv) nogil:
    cdef int i, j, c, r, piv
    cdef unsigned short lead, il, f, tmp
    for i in range(k * k):
        work[i] = gm[i]
    r = 0
    for c in range(k):
        piv = -1
        for i in range(r, k):
            if work[i * k + c]:
                piv = i
                break
        if piv < 0:
            return False
        if piv != r:
            for j in range(k):
                tmp = work[piv * k + j]
                work[piv * k + j] = work[r * k + j]
                work[r * k + j] = tmp
        lead = work[r * k + c]
        if lead != 1:
            il = inv[lead]
            for j in range(k):
                work[r * k + j] = mul[il * q + work[r * k + j]]
        for i in range(k):
            if i != r and work[i * k + c]:
                f = work[i * k + c]
                for j in range(k):
                    work[i * k + j] ^= mul[f * q + work[r * k + j]]
        r += 1
        if r == k:
            return True
    return r == k


def scan_scaling(int k, int n, int q, unsigned short[::1] gen,
                 unsigned short[::1] mul, unsigned short[::1] inv,
                 unsigned long long start, unsigned long long stop):
    cdef int digits[MAX_N]
    cdef unsigned short sq[MAX_N]
    cdef int i, l, j, t, pos, new, v, npairs
    cdef unsigned short acc
    cdef unsigned long long idx, tt
    cdef unsigned short* pp
    cdef unsigned short* gm
    cdef unsigned short* work
    cdef bint found
    if k < 0 or k > MAX_K or n <= 0 or n > MAX_N:
        raise ValueError("kernel caps: 0 <= k <= 32, 1 <= n <= 256")
    if start >= stop:
        return -1
    if k == 0:
        return start
    npairs = k * (k + 1) // 2
    pp = <unsigned short*>malloc(npairs * n * sizeof(unsigned short))
    gm = <unsigned short*>malloc(k * k * sizeof(unsigned short))
    work = <unsigned short*>malloc(k * k * sizeof(unsigned short))
    if pp == NULL or gm == NULL or work == NULL:
        free(pp); free(gm); free(work)
        raise MemoryError()
    t = 0
    for i in range(k):
        for l in range(i, k):
            for j in range(n):
                pp[t * n + j] = mul[gen[i * n + j] * q + gen[l * n + j]]
            t += 1
    tt = start
    for i in range(n - 1, -1, -1):
        digits[i] = tt % (q - 1)
        tt //= q - 1
        v = digits[i] + 1
        sq[i] = mul[v * q + v]
    found = False
    idx = start
    with nogil:
        while True:
            t = 0
            for i in range(k):
                for l in range(i, k):
                    acc = 0
                    for j in range(n):
                        acc ^= mul[sq[j] * q + pp[t * n + j]]
                    gm[i * k + l] = acc
                    gm[l * k + i] = acc
                    t += 1
            if _full_rank(k, q, gm, work, mul, inv):
                found = True
                break
            idx += 1
            if idx >= stop:
                break
            pos = n - 1
            while True:
                new = digits[pos] + 1
                if new == q - 1:
                    new = 0
                digits[pos] = new
                v = new + 1
                sq[pos] = mul[v * q + v]
                if new != 0:
                    break
                pos -= 1
    free(pp)
    free(gm)
    free(work)
    return idx if found else -1
