"""Exact integer and rational matrix helpers behind the certification paths.

Every product is provably exact: the float64 BLAS route is taken only when
a magnitude bound rules out rounding, the int64 route only when it rules
out overflow, and arbitrary-precision Python integers otherwise.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

_FLOAT_EXACT = 2**53
_INT64_SAFE = 2**62


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(abs(int(a.min())) if a.min() < -a.max() else int(a.max()))


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply two integer matrices; the result is exact at any magnitude.

    Any partial sum is bounded by inner_dim * max|a| * max|b|, so below
    2**53 every float64 product and addition is exactly representable and
    BLAS reordering cannot change the (integer) result.
    """
    inner = a.shape[1]
    bound = inner * _max_abs(a) * _max_abs(b)
    if a.dtype != object and b.dtype != object:
        if bound < _FLOAT_EXACT:
            c = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
            return c.astype(np.int64)
        if bound < _INT64_SAFE:
            return np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)
    return np.asarray(a, dtype=object).dot(np.asarray(b, dtype=object))


def bareiss_det(mat) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    m = [[int(v) for v in row] for row in mat]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(mat) -> list[Fraction]:
    """Characteristic polynomial coefficients [1, c1, ..., cm] of a rational
    matrix, so that det(xI - M) = x^m + c1 x^(m-1) + ... + cm.

    Faddeev-LeVerrier recurrence, exact in Fractions.
    """
    q = [[Fraction(v) for v in row] for row in mat]
    m = len(q)
    if any(len(row) != m for row in q):
        raise ValueError("matrix must be square")
    coeffs = [Fraction(1)]
    work = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        work[i][i] = Fraction(1)
    for k in range(1, m + 1):
        # work = Q @ work
        nxt = [
            [sum(q[i][t] * work[t][j] for t in range(m)) for j in range(m)]
            for i in range(m)
        ]
        ck = -sum(nxt[i][i] for i in range(m)) / k
        coeffs.append(ck)
        for i in range(m):
            nxt[i][i] += ck
        work = nxt
    return coeffs


def root_multiplicity(coeffs: list[Fraction], r) -> int:
    """Multiplicity of r as a root of the polynomial given by ``coeffs``
    (descending powers), via repeated synthetic division."""
    r = Fraction(r)
    mult = 0
    cur = list(coeffs)
    while len(cur) > 1:
        quo = [cur[0]]
        for c in cur[1:]:
            quo.append(c + r * quo[-1])
        if quo[-1] != 0:
            break
        mult += 1
        cur = quo[:-1]
    return mult
