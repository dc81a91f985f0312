# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in twins of ``_pykernels``.

Exponent vectors are packed into one unsigned 64-bit key with a mixed radix
wide enough that adding keys never carries between columns, so a sumset of
vectors becomes a sumset of integers.  Whenever the radix product or a
Bareiss entry would not fit in 64 bits, the call is delegated to the
pure-Python kernel instead of wrapping.
"""

from libc.stdlib cimport malloc, free, qsort
from libc.stdint cimport int64_t, uint64_t

from freiman import _pykernels as _py

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *res) nogil


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t *>a)[0]
    cdef uint64_t y = (<const uint64_t *>b)[0]
    return (x > y) - (x < y)


cdef Py_ssize_t _sort_unique(uint64_t *buf, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, w
    if n == 0:
        return 0
    qsort(buf, n, sizeof(uint64_t), _cmp_u64)
    w = 1
    for i in range(1, n):
        if buf[i] != buf[w - 1]:
            buf[w] = buf[i]
            w += 1
    return w


def _weights(list radix):
    """Place values for a mixed radix, or None if the key space exceeds 63 bits."""
    total = 1
    for r in radix:
        total *= r
    if total > (1 << 63):
        return None
    weights = []
    w = 1
    for r in reversed(radix):
        weights.append(w)
        w *= r
    weights.reverse()
    return weights


def _col_max(rows, Py_ssize_t n):
    out = [0] * n
    for r in rows:
        for c in range(n):
            v = r[c]
            if v < 0:
                raise ValueError("negative exponent")
            if v > out[c]:
                out[c] = v
    return out


cdef uint64_t *_encode(rows, list weights) except NULL:
    cdef Py_ssize_t m = len(rows)
    cdef uint64_t *keys = <uint64_t *>malloc((m if m else 1) * sizeof(uint64_t))
    if keys == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(m):
        keys[i] = <uint64_t>sum([e * w for e, w in zip(rows[i], weights)])
    return keys


cdef list _decode(uint64_t *keys, Py_ssize_t m, list radix):
    cdef Py_ssize_t n = len(radix)
    cdef Py_ssize_t i, c
    cdef uint64_t k, r
    cdef list out = []
    cdef list digits
    for i in range(m):
        k = keys[i]
        digits = [0] * n
        for c in range(n - 1, -1, -1):
            r = <uint64_t>radix[c]
            digits[c] = <object>(k % r)
            k //= r
        out.append(tuple(digits))
    return out


cdef Py_ssize_t _pair_sums(uint64_t *a, Py_ssize_t ma, uint64_t *b, Py_ssize_t mb,
                           uint64_t *out) noexcept nogil:
    cdef Py_ssize_t i, j, t = 0
    for i in range(ma):
        for j in range(mb):
            out[t] = a[i] + b[j]
            t += 1
    return _sort_unique(out, t)


def _sumset_keys(a, b):
    """Return (radix, unique-key list) or None when keys would not fit."""
    if not a or not b:
        return [], []
    cdef Py_ssize_t n = len(a[0])
    ma_ = _col_max(a, n)
    mb_ = _col_max(b, n)
    radix = [x + y + 1 for x, y in zip(ma_, mb_)]
    weights = _weights(radix)
    if weights is None:
        return None
    cdef Py_ssize_t la = len(a), lb = len(b), u
    cdef uint64_t *ka = _encode(a, weights)
    cdef uint64_t *kb = NULL
    cdef uint64_t *buf = NULL
    try:
        kb = _encode(b, weights)
        buf = <uint64_t *>malloc(la * lb * sizeof(uint64_t))
        if buf == NULL:
            raise MemoryError()
        with nogil:
            u = _pair_sums(ka, la, kb, lb, buf)
        return radix, _decode(buf, u, radix)
    finally:
        free(ka)
        free(kb)
        free(buf)


def sumset(a, b):
    """Distinct pairwise sums ``u + v`` for ``u`` in ``a``, ``v`` in ``b`` (unordered)."""
    res = _sumset_keys(a, b)
    if res is None:
        return _py.sumset(a, b)
    return res[1]


def sumset_size(a, b):
    if not a or not b:
        return 0
    cdef Py_ssize_t n = len(a[0])
    radix = [x + y + 1 for x, y in zip(_col_max(a, n), _col_max(b, n))]
    weights = _weights(radix)
    if weights is None:
        return _py.sumset_size(a, b)
    cdef Py_ssize_t la = len(a), lb = len(b), u
    cdef uint64_t *ka = _encode(a, weights)
    cdef uint64_t *kb = NULL
    cdef uint64_t *buf = NULL
    try:
        kb = _encode(b, weights)
        buf = <uint64_t *>malloc(la * lb * sizeof(uint64_t))
        if buf == NULL:
            raise MemoryError()
        with nogil:
            u = _pair_sums(ka, la, kb, lb, buf)
        return u
    finally:
        free(ka)
        free(kb)
        free(buf)


def power_sizes(rows, int k_max):
    """Sizes of the k-fold sumsets of ``rows`` for k = 1..k_max."""
    if k_max < 1:
        return []
    cdef Py_ssize_t n = len(rows[0])
    radix = [k_max * x + 1 for x in _col_max(rows, n)]
    weights = _weights(radix)
    if weights is None:
        return _py.power_sizes(rows, k_max)
    cdef Py_ssize_t g, cur, nxt, i
    cdef Py_ssize_t m = len(rows)
    cdef uint64_t *gens = _encode(rows, weights)
    cdef uint64_t *curbuf = NULL
    cdef uint64_t *nbuf = NULL
    sizes = []
    try:
        with nogil:
            g = _sort_unique(gens, m)
        curbuf = <uint64_t *>malloc(g * sizeof(uint64_t))
        if curbuf == NULL:
            raise MemoryError()
        for i in range(g):
            curbuf[i] = gens[i]
        cur = g
        sizes.append(cur)
        for _ in range(k_max - 1):
            nbuf = <uint64_t *>malloc(cur * g * sizeof(uint64_t))
            if nbuf == NULL:
                raise MemoryError()
            with nogil:
                nxt = _pair_sums(curbuf, cur, gens, g, nbuf)
            free(curbuf)
            curbuf = nbuf
            nbuf = NULL
            cur = nxt
            sizes.append(cur)
        return sizes
    finally:
        free(gens)
        free(curbuf)
        free(nbuf)


def minimal_rows(rows):
    """Drop duplicates and rows that componentwise dominate another row."""
    cand = sorted(set(rows), key=sum)
    cdef Py_ssize_t m = len(cand)
    if m == 0:
        return []
    cdef Py_ssize_t n = len(cand[0])
    for r in cand:
        for v in r:
            if v < 0 or v >= (1 << 62):
                return _py.minimal_rows(rows)
    cdef int64_t *buf = <int64_t *>malloc(m * n * sizeof(int64_t) + 1)
    cdef char *keep = <char *>malloc(m + 1)
    cdef Py_ssize_t i, j, c, nk = 0
    cdef Py_ssize_t *kept = <Py_ssize_t *>malloc((m + 1) * sizeof(Py_ssize_t))
    cdef bint dominated, divides
    if buf == NULL or keep == NULL or kept == NULL:
        free(buf)
        free(keep)
        free(kept)
        raise MemoryError()
    try:
        for i in range(m):
            r = cand[i]
            for c in range(n):
                buf[i * n + c] = r[c]
        with nogil:
            for i in range(m):
                dominated = False
                for j in range(nk):
                    divides = True
                    for c in range(n):
                        if buf[kept[j] * n + c] > buf[i * n + c]:
                            divides = False
                            break
                    if divides:
                        dominated = True
                        break
                keep[i] = not dominated
                if not dominated:
                    kept[nk] = i
                    nk += 1
        return [cand[i] for i in range(m) if keep[i]]
    finally:
        free(buf)
        free(keep)
        free(kept)


cdef int _bareiss(int64_t *m, Py_ssize_t nrows, Py_ssize_t ncols) except -2 nogil:
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long prev = 1, p, f, x, y, z
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                x = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = x
        p = m[r * ncols + c]
        for i in range(r + 1, nrows):
            f = m[i * ncols + c]
            for j in range(c + 1, ncols):
                if __builtin_mul_overflow(p, m[i * ncols + j], &x):
                    return -1
                if __builtin_mul_overflow(f, m[r * ncols + j], &y):
                    return -1
                if __builtin_sub_overflow(x, y, &z):
                    return -1
                m[i * ncols + j] = z // prev
            m[i * ncols + c] = 0
        prev = p
        r += 1
    return r


def rank(rows):
    """Rank over Q by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t i, c
    for r in rows:
        for v in r:
            if v >= (1 << 62) or v <= -(1 << 62):
                return _py.rank(rows)
    cdef int64_t *m = <int64_t *>malloc(nrows * ncols * sizeof(int64_t) + 1)
    cdef int res
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            r = rows[i]
            for c in range(ncols):
                m[i * ncols + c] = r[c]
        with nogil:
            res = _bareiss(m, nrows, ncols)
        if res < 0:
            return _py.rank(rows)
        return res
    finally:
        free(m)
