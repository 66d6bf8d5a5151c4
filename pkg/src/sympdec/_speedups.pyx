# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled numerator kernels.

Same contract as the pure-Python module: flat lists of arbitrary-precision
integers, four components per entry, negacyclic multiplication (z^4 = -1).
When every accumulated product provably fits in 64 bits the whole multiply
runs on C integers without touching Python objects; otherwise a compiled
loop over Python integers keeps exactness.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport calloc, free


def matmul_num(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """(n x k) times (k x m) over Z[z]; returns a flat list of length n*m*4."""
    cdef Py_ssize_t la = n * k * 4
    cdef Py_ssize_t lb = k * m * 4
    cdef Py_ssize_t lc = n * m * 4
    if len(a) != la or len(b) != lb:
        raise ValueError("flat list lengths do not match the shape")
    if lc == 0:
        return []
    if k == 0:
        return [0] * lc

    maxa = _max_abs(a)
    maxb = _max_abs(b)
    # every output component is a sum of k terms of four products each
    if maxa and maxb and (4 * k) * maxa * maxb < (<object>1 << 62):
        return _matmul_c(a, b, n, k, m, la, lb, lc)
    return _matmul_obj(a, b, n, k, m)


def _max_abs(list xs):
    out = 0
    for x in xs:
        if x < 0:
            x = -x
        if x > out:
            out = x
    return out


cdef list _matmul_c(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m,
                    Py_ssize_t la, Py_ssize_t lb, Py_ssize_t lc):
    cdef int64_t *ca = <int64_t *>calloc(la, sizeof(int64_t))
    cdef int64_t *cb = <int64_t *>calloc(lb, sizeof(int64_t))
    cdef int64_t *cc = <int64_t *>calloc(lc, sizeof(int64_t))
    if ca == NULL or cb == NULL or cc == NULL:
        free(ca); free(cb); free(cc)
        raise MemoryError()
    cdef Py_ssize_t idx, i, t, j, p, q, r, aoff, boff, coff
    cdef int64_t a0, a1, a2, a3, b0, b1, b2, b3
    cdef Py_ssize_t m4 = m * 4
    try:
        for idx in range(la):
            ca[idx] = a[idx]
        for idx in range(lb):
            cb[idx] = b[idx]
        with nogil:
            for i in range(n):
                aoff = i * k * 4
                coff = i * m4
                for t in range(k):
                    p = aoff + 4 * t
                    a0 = ca[p]; a1 = ca[p + 1]; a2 = ca[p + 2]; a3 = ca[p + 3]
                    if a0 == 0 and a1 == 0 and a2 == 0 and a3 == 0:
                        continue
                    boff = t * m4
                    for j in range(m):
                        q = boff + 4 * j
                        b0 = cb[q]; b1 = cb[q + 1]; b2 = cb[q + 2]; b3 = cb[q + 3]
                        if b0 == 0 and b1 == 0 and b2 == 0 and b3 == 0:
                            continue
                        r = coff + 4 * j
                        cc[r] += a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
                        cc[r + 1] += a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
                        cc[r + 2] += a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
                        cc[r + 3] += a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        out = [0] * lc
        for idx in range(lc):
            out[idx] = cc[idx]
        return out
    finally:
        free(ca); free(cb); free(cc)


cdef list _matmul_obj(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef list c = [0] * (n * m * 4)
    cdef Py_ssize_t m4 = m * 4
    cdef Py_ssize_t i, t, j, p, q, r, aoff, boff, coff
    for i in range(n):
        aoff = i * k * 4
        coff = i * m4
        for t in range(k):
            p = aoff + 4 * t
            a0 = a[p]; a1 = a[p + 1]; a2 = a[p + 2]; a3 = a[p + 3]
            if a0 == 0 and a1 == 0 and a2 == 0 and a3 == 0:
                continue
            boff = t * m4
            for j in range(m):
                q = boff + 4 * j
                b0 = b[q]; b1 = b[q + 1]; b2 = b[q + 2]; b3 = b[q + 3]
                if b0 == 0 and b1 == 0 and b2 == 0 and b3 == 0:
                    continue
                r = coff + 4 * j
                c[r] += a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
                c[r + 1] += a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
                c[r + 2] += a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
                c[r + 3] += a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    return c
