"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built, and as the reference in the benchmark.
"""

from itertools import combinations


def det(rows):
    """Bareiss fraction-free elimination with row pivoting."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rooted_minor_sum(rows):
    """Sum over k of the determinant with row k and column k removed."""
    n = len(rows)
    total = 0
    for k in range(n):
        sub = [[x for j, x in enumerate(r) if j != k] for i, r in enumerate(rows) if i != k]
        total += det(sub)
    return total


def skew4_det_counts(rows):
    """Histogram of ``det(M[S, S])`` over 4-subsets S of a skew-symmetric M.

    A 4x4 skew determinant is the square of its Pfaffian
    ``m01*m23 - m02*m13 + m03*m12``.
    """
    counts = {}
    for a, b, c, d in combinations(range(len(rows)), 4):
        pf = rows[a][b] * rows[c][d] - rows[a][c] * rows[b][d] + rows[a][d] * rows[b][c]
        v = pf * pf
        counts[v] = counts.get(v, 0) + 1
    return counts
