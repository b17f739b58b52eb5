"""Hurwitz-type matrices, their minors, the J(c) factorization and TNN tests.

Layouts (0-based row i, column c; a, b leading-first with b padded to deg p):
  H(p,q), deg q < deg p:   row 2i = a_{c-i},   row 2i+1 = b_{c-i}
  H(p,q), deg q = deg p:   row 2i = b_{c-i},   row 2i+1 = a_{c-i-1}
  H_2n(p,q), deg q < n:    row 2i = b_{c-i+1}, row 2i+1 = a_{c-i}
  H_2n+1(p,q), deg q = n:  row 2i = a_{c-i},   row 2i+1 = b_{c-i}
  T(g):                    entry g_{c-i}
  D_inf(g), g ascending:   row 2i = a_{c-i},   row 2i+1 = (c-i) a_{c-i}
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .errors import DegreeMismatch, PreconditionError, ConsistencyError
from .matrix import det, leading_principal_minors, matmul, minor_table
from .poly_core import Polynomial, gcd, exact_div, derivative
from . import contfrac

H_INFINITE = "H_infinite"
H_FINITE_2N = "H_finite_2n"
H_FINITE_2N1 = "H_finite_2n1"
TOEPLITZ = "Toeplitz_T"
DISCRIMINANT_D2N = "DiscriminantMatrix_D2n"
D_INFINITY = "D_infinity"


def _seq_at(seq, k):
    return seq[k] if 0 <= k < len(seq) else Fraction(0)


@dataclass(frozen=True)
class BandMatrixView:
    kind: str
    sources: tuple
    generator: Callable = field(compare=False, repr=False)
    truncation: int = 0

    def entry(self, i: int, c: int) -> Fraction:
        return self.generator(i, c)

    def matrix(self, rows: Optional[int] = None, cols: Optional[int] = None):
        rows = self.truncation if rows is None else rows
        cols = rows if cols is None else cols
        return [[self.generator(i, c) for c in range(cols)] for i in range(rows)]


def _ab(p: Polynomial, q: Polynomial):
    if q.degree > p.degree:
        raise DegreeMismatch("deg q must not exceed deg p")
    n = p.degree
    a = p.coeffs
    b = q.padded(n) if not q.is_zero() else (Fraction(0),) * (n + 1)
    return n, a, b


def hurwitz_infinite(p: Polynomial, q: Polynomial, truncation: Optional[int] = None) -> BandMatrixView:
    n, a, b = _ab(p, q)
    if truncation is None:
        truncation = 2 * n + 4
    if q.degree < p.degree:
        def gen(i, c):
            return _seq_at(a, c - i // 2) if i % 2 == 0 else _seq_at(b, c - i // 2)
    else:
        def gen(i, c):
            return _seq_at(b, c - i // 2) if i % 2 == 0 else _seq_at(a, c - i // 2 - 1)
    return BandMatrixView(H_INFINITE, (p, q), gen, truncation)


def hurwitz_finite(p: Polynomial, q: Polynomial) -> BandMatrixView:
    """H_2n (deg q < deg p) or H_2n+1 (deg q = deg p)."""
    n, a, b = _ab(p, q)
    if q.degree < p.degree:
        def gen(i, c):
            return _seq_at(b, c - i // 2 + 1) if i % 2 == 0 else _seq_at(a, c - i // 2)
        return BandMatrixView(H_FINITE_2N, (p, q), gen, 2 * n)

    def gen(i, c):
        return _seq_at(a, c - i // 2) if i % 2 == 0 else _seq_at(b, c - i // 2)
    return BandMatrixView(H_FINITE_2N1, (p, q), gen, 2 * n + 1)


def discriminant_matrix(p: Polynomial) -> BandMatrixView:
    """D_2n(p) = H_2n(p, p')."""
    v = hurwitz_finite(p, derivative(p))
    return BandMatrixView(DISCRIMINANT_D2N, (p,), v.generator, v.truncation)


def toeplitz_matrix(g: Polynomial, truncation: int = 8) -> BandMatrixView:
    cs = g.coeffs

    def gen(i, c):
        return _seq_at(cs, c - i)
    return BandMatrixView(TOEPLITZ, (g,), gen, truncation)


def d_infinity(g_ascending, truncation: int = 8) -> BandMatrixView:
    """D_inf(g) for g(z) = a_0 + a_1 z + ... + a_n z^n given as (a_0, ..., a_n)."""
    a = tuple(Fraction(x) for x in g_ascending)

    def gen(i, c):
        k = c - i // 2
        if i % 2 == 0:
            return _seq_at(a, k)
        return k * _seq_at(a, k)
    return BandMatrixView(D_INFINITY, (Polynomial.from_ascending(a),), gen, truncation)


def eta_minor(p: Polynomial, q: Polynomial, j: int) -> Fraction:
    if j < 1:
        raise ValueError("j must be >= 1")
    return det(hurwitz_infinite(p, q).matrix(j))


def eta_minors(p: Polynomial, q: Polynomial, upto: int) -> tuple:
    return tuple(leading_principal_minors(hurwitz_infinite(p, q).matrix(upto)))


def delta_minor_pair(p: Polynomial, q: Polynomial, j: int) -> Fraction:
    v = hurwitz_finite(p, q)
    if not 1 <= j <= v.truncation:
        raise ValueError(f"j must lie in 1..{v.truncation}")
    return det(v.matrix(j))


def delta_minors(p: Polynomial, q: Polynomial) -> tuple:
    v = hurwitz_finite(p, q)
    return tuple(leading_principal_minors(v.matrix()))


def hurwitz_poly_matrix(p: Polynomial):
    """Classical n x n Hurwitz matrix: entry (i, c) = a_{2c+1-i}."""
    n = p.degree
    if n < 1:
        raise PreconditionError("degree must be at least 1")
    return [[p.coef(2 * c + 1 - i) for c in range(n)] for i in range(n)]


def hurwitz_poly_minors(p: Polynomial) -> tuple:
    return tuple(leading_principal_minors(hurwitz_poly_matrix(p)))


# ---- J(c) factorization ----

def j_factor(c, size: int):
    M = [[Fraction(0)] * size for _ in range(size)]
    for i in range(0, size, 2):
        M[i][i] = Fraction(c)
        if i + 1 < size:
            M[i][i + 1] = Fraction(1)
        if i + 2 < size:
            M[i + 1][i + 2] = Fraction(1)
    return M


def h01(size: int):
    """H(0, 1): ones at (2i, i)."""
    M = [[Fraction(0)] * size for _ in range(size)]
    for i in range(0, size, 2):
        if i // 2 < size:
            M[i][i // 2] = Fraction(1)
    return M


@dataclass(frozen=True)
class StieltjesFactorization:
    c0: Optional[Fraction]      # present only in the equal-degree case
    c: tuple
    g: Polynomial               # H(p,q) = [J(c0)] J(c1)..J(ck) H(0,1) T(g)

    def factors(self, size: int):
        out = []
        if self.c0 is not None:
            out.append(j_factor(self.c0, size))
        out.extend(j_factor(ci, size) for ci in self.c)
        out.append(h01(size))
        out.append(toeplitz_matrix(self.g, size).matrix())
        return out

    def product(self, window: int):
        """Exact window x window block of the infinite product."""
        # each J factor widens the band by one column; H(0,1) halves column reach
        size = 2 * window + len(self.c) + 3
        fs = self.factors(size)
        M = fs[0]
        for F in fs[1:]:
            M = matmul(M, F)
        return [row[:window] for row in M[:window]]


def _product_without_g(c0, c, size):
    M = j_factor(c0, size) if c0 is not None else None
    for ci in c:
        J = j_factor(ci, size)
        M = J if M is None else matmul(M, J)
    H = h01(size)
    return H if M is None else matmul(M, H)


def stieltjes_factorization(p: Polynomial, q: Polynomial):
    """Factor H(p,q); returns NotStieltjes when the fraction does not exist."""
    if q.degree > p.degree:
        raise DegreeMismatch("deg q must not exceed deg p")
    if q.is_zero():
        return StieltjesFactorization(None, (), p)
    sf = contfrac.stieltjes_fraction(p, q)
    if isinstance(sf, contfrac.NotStieltjes):
        return sf
    c0 = sf.c0 if q.degree == p.degree else None
    r = (sf.k + 1) // 2
    size = 2 * r + 6
    M = _product_without_g(c0, sf.c, size)
    # even rows of the g-free product carry the reduced denominator
    if c0 is None:
        phat = Polynomial(tuple(M[0][: r + 1]))
    else:
        phat = Polynomial(tuple(M[1][1: r + 2]))
    if phat.degree != r:
        raise ConsistencyError("unexpected degree of the reduced denominator")
    g = exact_div(p, phat)
    return StieltjesFactorization(c0, sf.c, g)


def verify_factorization(p: Polynomial, q: Polynomial, fac: StieltjesFactorization, window: int = 12) -> bool:
    H = hurwitz_infinite(p, q).matrix(window)
    return fac.product(window) == H


# ---- minor search ----

@dataclass(frozen=True)
class MinorViolation:
    rows: tuple         # 1-based indices
    cols: tuple
    value: Fraction


def find_negative_minor(M, max_order: int = 4) -> Optional[MinorViolation]:
    """First negative minor of a finite matrix.

    Principal minors are scanned first (order, then lexicographic index set),
    then all minors ordered by (order, rows, cols) lexicographically.
    """
    nr = len(M)
    nc = len(M[0]) if M else 0
    top = min(max_order, nr, nc)
    table = minor_table(M, top)
    for k in range(1, top + 1):
        for idx in combinations(range(min(nr, nc)), k):
            if table.sign(idx, idx) < 0:
                return MinorViolation(tuple(i + 1 for i in idx), tuple(i + 1 for i in idx),
                                      table.value(idx, idx))
    for k in range(1, top + 1):
        for rows in combinations(range(nr), k):
            for cols in combinations(range(nc), k):
                if table.sign(rows, cols) < 0:
                    return MinorViolation(tuple(i + 1 for i in rows), tuple(j + 1 for j in cols),
                                          table.value(rows, cols))
    return None


# ---- total nonnegativity ----

@dataclass(frozen=True)
class TNNCertificate:
    verdict: bool
    c: tuple = ()                           # positive Stieltjes coefficients when true
    c0: Optional[Fraction] = None
    g: Optional[Polynomial] = None          # gcd factor with only nonpositive zeros
    witness: Optional[MinorViolation] = None
    reason: str = ""


def _normalize_sign(p: Polynomial, q: Polynomial):
    if p.lead < 0:
        return -p, -q
    return p, q


def tnn_certificate(p: Polynomial, q: Polynomial, search_window: int = 10, search_order: int = 4) -> TNNCertificate:
    """Total nonnegativity of H(p,q) decided by the Stieltjes criterion.

    p is normalized to a positive leading coefficient (both p and q are
    negated if needed). When the verdict is false a negative minor is looked
    up in a bounded window; it may be absent if the window is too small.
    """
    from .rootcount import only_nonpositive_zeros  # local import: rootcount builds on this module
    p, q = _normalize_sign(p, q)
    if q.degree > p.degree:
        raise DegreeMismatch("deg q must not exceed deg p")
    verdict = False
    reason = ""
    c, c0, g = (), None, None
    if q.is_zero():
        verdict = only_nonpositive_zeros(p)
        g = p
        reason = "q = 0; p has only nonpositive zeros" if verdict else "q = 0; p has a zero off the nonpositive axis"
    else:
        fac = stieltjes_factorization(p, q)
        if isinstance(fac, contfrac.NotStieltjes):
            reason = f"no Stieltjes fraction ({fac.condition}_{fac.index} = 0)"
        else:
            c, c0, g = fac.c, fac.c0, fac.g
            if c0 is not None and c0 <= 0:
                reason = "leading coefficient ratio b_0/a_0 is not positive"
            elif any(x <= 0 for x in c):
                reason = "a Stieltjes coefficient is not positive"
            elif not only_nonpositive_zeros(g):
                reason = "common factor has a zero off the nonpositive axis"
            else:
                verdict = True
                reason = "all Stieltjes coefficients positive; common factor has nonpositive zeros"
    witness = None
    if not verdict:
        M = hurwitz_infinite(p, q).matrix(search_window)
        witness = find_negative_minor(M, search_order)
    return TNNCertificate(verdict, c, c0, g, witness, reason)


def finite_tnn_nonsingular(p: Polynomial, q: Polynomial) -> bool:
    """q/p is an R-function with exactly deg p negative poles."""
    from .cauchy_rfunc import classify_r_function
    p, q = _normalize_sign(p, q)
    if q.is_zero() or q.degree > p.degree or p.degree < 1:
        return False
    if gcd(p, q).degree > 0:
        return False
    v = classify_r_function(p, q)
    result = v.is_r_negative_type and v.negative_poles == p.degree
    nonsingular = det(hurwitz_finite(p, q).matrix()) != 0
    if result and not (nonsingular and tnn_certificate(p, q).verdict):
        raise ConsistencyError("finite Hurwitz criterion disagrees with the infinite one")
    return result
