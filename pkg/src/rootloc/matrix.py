"""Small exact dense-matrix helpers over Fraction.

Determinants use fraction-free (Bareiss) elimination on integer rows
obtained by clearing denominators row by row.
"""
from fractions import Fraction
from itertools import combinations
from math import lcm


def _clear_row(row):
    m = 1
    for x in row:
        m = lcm(m, x.denominator)
    return m, [int(x * m) for x in row]


def det(M):
    """Exact determinant of a square matrix given as a list of rows."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    scale = 1
    A = []
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
        m, ints = _clear_row([Fraction(x) for x in row])
        scale *= m
        A.append(ints)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = A[k][k]
        rk = A[k]
        for i in range(k + 1, n):
            ri = A[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return Fraction(sign * A[n - 1][n - 1], scale)


def leading_principal_minors(M, count=None):
    """Leading principal minors of orders 1..count.

    Fast path: one Bareiss sweep without pivoting, whose pivots are exactly
    the leading minors. Falls back to separate determinants once a zero
    pivot appears.
    """
    n = len(M)
    count = n if count is None else min(count, n)
    out = []
    rows = [[Fraction(x) for x in r[:count]] for r in M[:count]]
    scales = []
    A = []
    for r in rows:
        m, ints = _clear_row(r)
        scales.append(m)
        A.append(ints)
    prev = 1
    scale = 1
    k = 0
    while k < count:
        scale *= scales[k]
        akk = A[k][k]
        out.append(Fraction(akk, scale))
        if akk == 0:
            break
        for i in range(k + 1, count):
            ri = A[i]
            aik = ri[k]
            rk = A[k]
            for j in range(k + 1, count):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
        k += 1
    for j in range(len(out) + 1, count + 1):
        out.append(det([r[:j] for r in rows[:j]]))
    return out


class MinorTable:
    """All minors of orders 1..max_order of a finite matrix.

    Rows are scaled to integers first (positive factors, so signs are kept)
    and each order is expanded along its first row from the previous order.
    Keys are 0-based (rows, cols) tuples.
    """

    def __init__(self, M, max_order):
        nr = len(M)
        nc = len(M[0]) if M else 0
        self.scales = []
        A = []
        for row in M:
            m, ints = _clear_row([Fraction(x) for x in row])
            self.scales.append(m)
            A.append(ints)
        self.shape = (nr, nc)
        self.max_order = min(max_order, nr, nc)
        self.raw = {}
        prev = {}
        for k in range(1, self.max_order + 1):
            cur = {}
            for rows in combinations(range(nr), k):
                r0 = A[rows[0]]
                rest = rows[1:]
                for cols in combinations(range(nc), k):
                    if k == 1:
                        cur[(rows, cols)] = r0[cols[0]]
                        continue
                    v = 0
                    for t, c in enumerate(cols):
                        a = r0[c]
                        if a:
                            sub = prev[(rest, cols[:t] + cols[t + 1:])]
                            if sub:
                                v += -a * sub if t % 2 else a * sub
                    cur[(rows, cols)] = v
            self.raw.update(cur)
            prev = cur

    def sign(self, rows, cols) -> int:
        v = self.raw[(tuple(rows), tuple(cols))]
        return (v > 0) - (v < 0)

    def value(self, rows, cols) -> Fraction:
        d = 1
        for i in rows:
            d *= self.scales[i]
        return Fraction(self.raw[(tuple(rows), tuple(cols))], d)


def minor_table(M, max_order) -> MinorTable:
    return MinorTable(M, max_order)


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [Fraction(0)] * cols
        for t in range(inner):
            a = row[t]
            if a:
                bt = B[t]
                for c in range(cols):
                    if bt[c]:
                        acc[c] += a * bt[c]
        out.append(acc)
    return out


def submatrix(M, rows, cols):
    return [[M[i][j] for j in cols] for i in rows]


def format_matrix(M):
    """Row-major dump, one row per line, entries as exact rationals."""
    return "\n".join(" ".join(str(Fraction(x)) for x in row) for row in M)
