# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for small exact determinants.

Callers guarantee that every minor of the input fits in 60 bits (see
``kernels.fits_native``); products are then formed in 128-bit integers so the
Bareiss step never overflows.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef __int128 arb_i128;
    """
    ctypedef long long arb_i128


cdef long long _bareiss(long long* a, int n) nogil:
    cdef int i, j, k, p
    cdef long long sign = 1, prev = 1, akk, aik, t
    cdef arb_i128 num
    if n == 0:
        return 1
    for k in range(n - 1):
        if a[k * n + k] == 0:
            p = -1
            for i in range(k + 1, n):
                if a[i * n + k] != 0:
                    p = i
                    break
            if p < 0:
                return 0
            for j in range(n):
                t = a[k * n + j]
                a[k * n + j] = a[p * n + j]
                a[p * n + j] = t
            sign = -sign
        akk = a[k * n + k]
        for i in range(k + 1, n):
            aik = a[i * n + k]
            for j in range(k + 1, n):
                num = <arb_i128>akk * a[i * n + j] - <arb_i128>aik * a[k * n + j]
                a[i * n + j] = <long long>(num / prev)
        prev = akk
    return sign * a[(n - 1) * n + (n - 1)]


cdef long long* _load(rows, int n) except NULL:
    cdef long long* a = <long long*>malloc(n * n * sizeof(long long) + 1)
    if a == NULL:
        raise MemoryError()
    cdef int i, j
    for i in range(n):
        r = rows[i]
        for j in range(n):
            a[i * n + j] = r[j]
    return a


def det(rows):
    cdef int n = len(rows)
    if n == 0:
        return 1
    cdef long long* a = _load(rows, n)
    cdef long long d
    try:
        with nogil:
            d = _bareiss(a, n)
    finally:
        free(a)
    return d


def rooted_minor_sum(rows):
    cdef int n = len(rows)
    cdef int m = n - 1
    cdef int i, j, k, r, c
    cdef long long* full = _load(rows, n)
    cdef long long* sub = <long long*>malloc(m * m * sizeof(long long) + 1)
    if sub == NULL:
        free(full)
        raise MemoryError()
    total = 0
    cdef long long d
    try:
        for k in range(n):
            r = 0
            for i in range(n):
                if i == k:
                    continue
                c = 0
                for j in range(n):
                    if j == k:
                        continue
                    sub[r * m + c] = full[i * n + j]
                    c += 1
                r += 1
            with nogil:
                d = _bareiss(sub, m)
            total += d
    finally:
        free(full)
        free(sub)
    return total


def skew4_det_counts(rows):
    cdef int n = len(rows)
    cdef long long* a = _load(rows, n) if n > 0 else NULL
    cdef int p, q, r, s
    cdef long long pf
    counts = {}
    try:
        for p in range(n):
            for q in range(p + 1, n):
                for r in range(q + 1, n):
                    for s in range(r + 1, n):
                        pf = (a[p * n + q] * a[r * n + s]
                              - a[p * n + r] * a[q * n + s]
                              + a[p * n + s] * a[q * n + r])
                        v = pf * pf
                        counts[v] = counts.get(v, 0) + 1
    finally:
        if a != NULL:
            free(a)
    return counts
