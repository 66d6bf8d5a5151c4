"""Pure-Python fallback for the hot numerator kernels.

Matrices are flat lists of arbitrary-precision integers, four numerator
components per entry (basis 1, z, z^2, z^3 with z^4 = -1), row-major.
"""


def matmul_num(a, b, n, k, m):
    """(n x k) times (k x m) over Z[z]; returns a flat list of length n*m*4."""
    c = [0] * (n * m * 4)
    m4 = m * 4
    for i in range(n):
        aoff = i * k * 4
        coff = i * m4
        for t in range(k):
            p = aoff + 4 * t
            a0 = a[p]
            a1 = a[p + 1]
            a2 = a[p + 2]
            a3 = a[p + 3]
            if a0 == 0 and a1 == 0 and a2 == 0 and a3 == 0:
                continue
            boff = t * m4
            for j in range(m):
                q = boff + 4 * j
                b0 = b[q]
                b1 = b[q + 1]
                b2 = b[q + 2]
                b3 = b[q + 3]
                if b0 == 0 and b1 == 0 and b2 == 0 and b3 == 0:
                    continue
                r = coff + 4 * j
                c[r] += a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
                c[r + 1] += a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
                c[r + 2] += a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
                c[r + 3] += a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    return c
