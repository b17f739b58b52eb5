"""Euclidean/Sturm chains, J-fractions, Stieltjes fractions, partial quotients.

Sign conventions
  plus_chain:  R = s_{-1} + 1/(a_1 z + b_1 + 1/(a_2 z + b_2 + ...))
  minus_chain: R = -alpha z + beta + 1/(a_1 z + b_1 - 1/(a_2 z + b_2 - ...))
The two are related by q~_j = (-1)^(j-1) q_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DegreeOrder, SingularMinor, ZeroDenominator, ConsistencyError
from .matrix import det
from .poly_core import Polynomial, divmod_poly, gcd, exact_div, poly, evaluate
from .series_hankel import (
    LaurentPrefix, MinorLedger, laurent_prefix, minor_ledger, pole_count, _check_pair,
)

PLUS = "plus_chain"
MINUS = "minus_chain"
EUCLID_PLUS = "euclid_plus"
STURM_MINUS = "sturm_minus"


@dataclass(frozen=True)
class EuclideanChain:
    f: tuple                # f_0 .. f_k (last nonzero remainder is f_k)
    quotients: tuple        # q_1 .. q_k
    signs: str
    degrees: tuple          # n_j = deg q_j
    partial_degrees: tuple  # m_j = n_1 + ... + n_j

    @property
    def last(self) -> Polynomial:
        return self.f[-1]


def euclidean_chain(f0: Polynomial, f1: Polynomial, signs: str = EUCLID_PLUS) -> EuclideanChain:
    """Remainder chain f_{j-1} = q_j f_j + f_{j+1}.

    With signs=sturm_minus the chain is transformed to
    f~_j = (-1)^{j(j-1)/2} f_j, q~_j = (-1)^{j-1} q_j, so that
    f~_{j-1} = q~_j f~_j - f~_{j+1}.
    """
    if f0.is_zero():
        raise ZeroDenominator("f0 must be nonzero")
    if f1.degree >= f0.degree:
        raise DegreeOrder("deg f1 must be below deg f0")
    fs = [f0]
    qs = []
    a, b = f0, f1
    while not b.is_zero():
        qq, rr = divmod_poly(a, b)
        fs.append(b)
        qs.append(qq)
        a, b = b, rr
    if signs == STURM_MINUS:
        fs = [f if (j * (j - 1) // 2) % 2 == 0 else -f for j, f in enumerate(fs)]
        qs = [q if j % 2 == 0 else -q for j, q in enumerate(qs)]  # j is 0-based here
    elif signs != EUCLID_PLUS:
        raise ValueError(f"unknown sign convention {signs!r}")
    degs = tuple(q.degree for q in qs)
    parts = []
    acc = 0
    for d in degs:
        acc += d
        parts.append(acc)
    return EuclideanChain(tuple(fs), tuple(qs), signs, degs, tuple(parts))


@dataclass(frozen=True)
class JFraction:
    alpha: tuple
    beta: tuple
    head_alpha: Fraction = Fraction(0)
    head_beta: Fraction = Fraction(0)
    convention: str = PLUS

    @property
    def r(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class NotRegular:
    index: int          # first j <= r with D_j = 0


@dataclass(frozen=True)
class JSecondForm:
    d: tuple            # d_0 .. d_{r-1}
    e: tuple            # e_1 .. e_r


@dataclass(frozen=True)
class StieltjesFraction:
    c0: Fraction
    c: tuple            # c_1 .. c_k
    k: int
    terminal: str       # "finite_at_zero" (k = 2r) or "pole_at_zero" (k = 2r-1)


@dataclass(frozen=True)
class NotStieltjes:
    condition: str      # "D" or "Dhat"
    index: int


def convert(jf: JFraction, convention: str) -> JFraction:
    """Lossless switch between the two sign conventions."""
    if jf.convention == convention:
        return jf
    al = tuple(a if j % 2 == 0 else -a for j, a in enumerate(jf.alpha))
    be = tuple(b if j % 2 == 0 else -b for j, b in enumerate(jf.beta))
    return JFraction(al, be, jf.head_alpha, jf.head_beta, convention)


def _head_split(p: Polynomial, q: Polynomial):
    """Split q/p = h(z) + q1/p with deg q1 < deg p; returns (h, q1)."""
    h, q1 = divmod_poly(q, p)
    return h, q1


def j_fraction(p: Polynomial, q: Polynomial, convention: str = PLUS) -> Union[JFraction, NotRegular]:
    """J-fraction of q/p; a linear head -alpha z + beta is split off first."""
    if p.is_zero():
        raise ZeroDenominator("denominator p is the zero polynomial")
    if q.degree > p.degree + 1:
        raise DegreeOrder("deg q may exceed deg p by at most one")
    h, q1 = _head_split(p, q)
    head_alpha = -h.power_coef(1)
    head_beta = h.power_coef(0)
    led = minor_ledger(p, q1)
    r = led.rank
    for j in range(1, r + 1):
        if led.d(j) == 0:
            return NotRegular(j)
    ch = euclidean_chain(p, q1, EUCLID_PLUS)
    if any(d != 1 for d in ch.degrees):
        raise ConsistencyError("nonzero Hankel minors but nonlinear quotient")
    al = tuple(qq.power_coef(1) for qq in ch.quotients)
    be = tuple(qq.power_coef(0) for qq in ch.quotients)
    return convert(JFraction(al, be, head_alpha, head_beta, PLUS), convention)


def j_second_form(jf: JFraction, ledger: Optional[MinorLedger] = None) -> JSecondForm:
    """d_0 = 1/a_1, d_j = -1/(a_j a_{j+1}), e_j = -b_j/a_j (plus-chain values)."""
    jf = convert(jf, PLUS)
    al, be = jf.alpha, jf.beta
    if not al:
        return JSecondForm((), ())
    d = [1 / al[0]] + [-1 / (al[j] * al[j + 1]) for j in range(len(al) - 1)]
    e = [-b / a for a, b in zip(al, be)]
    if ledger is not None:
        for j in range(len(d)):
            want = ledger.d(j - 1) * ledger.d(j + 1) / ledger.d(j) ** 2
            if want != d[j]:
                raise ConsistencyError(f"d-law fails at j={j}")
    return JSecondForm(tuple(d), tuple(e))


def stieltjes_fraction(p: Polynomial, q: Polynomial) -> Union[StieltjesFraction, NotStieltjes]:
    """c_{2j-1} = D^_{j-1}^2/(D_{j-1} D_j), c_{2j} = -D_j^2/(D^_{j-1} D^_j)."""
    _check_pair(p, q)
    led = minor_ledger(p, q)
    r = led.rank
    c0 = q.coef(0) / p.lead if q.degree == p.degree else Fraction(0)
    for j in range(1, r + 1):
        if led.d(j) == 0:
            return NotStieltjes("D", j)
    for j in range(1, r):
        if led.dhat(j) == 0:
            return NotStieltjes("Dhat", j)
    zero_pole = r > 0 and led.dhat(r) == 0
    k = 2 * r - 1 if zero_pole else 2 * r
    c = []
    for i in range(1, k + 1):
        if i % 2 == 1:
            j = (i + 1) // 2
            c.append(led.dhat(j - 1) ** 2 / (led.d(j - 1) * led.d(j)))
        else:
            j = i // 2
            c.append(-led.d(j) ** 2 / (led.dhat(j - 1) * led.dhat(j)))
    return StieltjesFraction(c0, tuple(c), k, "pole_at_zero" if zero_pole else "finite_at_zero")


def _normalize(num: Polynomial, den: Polynomial):
    g = gcd(den, num) if not num.is_zero() else Polynomial.const(1)
    if g.degree > 0:
        num, den = exact_div(num, g), exact_div(den, g)
    lead = den.lead
    return den.scale(1 / lead), num.scale(1 / lead)


def reconstruct_rational(fr) -> tuple:
    """Fold a fraction bottom-up; returns (p, q) coprime with p monic."""
    one = Polynomial.const(1)
    N, Dn = Polynomial.zero(), one
    if isinstance(fr, JFraction):
        sgn = 1 if fr.convention == PLUS else -1
        for a, b in reversed(list(zip(fr.alpha, fr.beta))):
            lev = poly(a, b)
            N, Dn = Dn, lev * Dn + N.scale(sgn)
        head = poly(-fr.head_alpha, fr.head_beta)
        return _normalize(head * Dn + N, Dn)
    if isinstance(fr, JSecondForm):
        for j in reversed(range(len(fr.e))):
            lev = poly(1, -fr.e[j])
            N, Dn = Dn.scale(fr.d[j]), lev * Dn - N
        return _normalize(N, Dn)
    if isinstance(fr, StieltjesFraction):
        for i in reversed(range(fr.k)):
            ci = fr.c[i]
            lev = poly(ci, 0) if i % 2 == 0 else Polynomial.const(ci)
            N, Dn = Dn, lev * Dn + N
        return _normalize(Dn.scale(fr.c0) + N, Dn)
    raise TypeError(f"cannot reconstruct from {type(fr).__name__}")


def regular_indices(ledger: MinorLedger) -> tuple:
    """Indices m_1 < m_2 < ... <= r with D_m != 0."""
    r = ledger.rank
    return tuple(m for m in range(1, r + 1) if ledger.d(m) != 0)


def partial_denominator(s: LaurentPrefix, ledger: MinorLedger, j: int, lead=1) -> Polynomial:
    """P_j: bordered Hankel determinant over D_{m_j}, scaled to leading coef `lead`."""
    ms = regular_indices(ledger)
    if j < 1 or j > len(ms):
        raise SingularMinor(f"no regular index number {j}")
    m = ms[j - 1]
    Dm = ledger.d(m)
    if Dm == 0:
        raise SingularMinor(f"D_{m} = 0")
    rows = [[s.at(i + k) for k in range(m + 1)] for i in range(m)]
    coeffs = []
    for k in range(m + 1):  # coefficient of z^k: cofactor along the last row
        minor = [row[:k] + row[k + 1:] for row in rows]
        coeffs.append((-1) ** (m + k) * det(minor) / Dm)
    return Polynomial.from_ascending(coeffs).scale(lead)


def partial_numerator(s: LaurentPrefix, P: Polynomial) -> Polynomial:
    """Polynomial part of P(z) * R(z), using the series prefix."""
    n = P.degree
    out = []
    for t in range(n, -1, -1):       # coefficient of z^t
        acc = s.at(-1) * P.power_coef(t)
        for k in range(t + 1, n + 1):
            acc += P.power_coef(k) * s.at(k - t - 1)
        out.append(acc)
    return Polynomial(tuple(out))


def partial_quotient(s: LaurentPrefix, ledger: MinorLedger, j: int):
    """(Q_j, P_j) with Q_j/P_j agreeing with R through s_{2 m_j - 1}."""
    P = partial_denominator(s, ledger, j)
    return partial_numerator(s, P), P


def jacobi_matrix(jsf: JSecondForm):
    """Tridiagonal form: diagonal e_j, subdiagonal d_j, superdiagonal 1."""
    r = len(jsf.e)
    M = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        M[i][i] = jsf.e[i]
        if i + 1 < r:
            M[i][i + 1] = Fraction(1)
            M[i + 1][i] = jsf.d[i + 1]
    return M


def jacobi_leading_minors(jsf: JSecondForm, ledger: Optional[MinorLedger] = None) -> tuple:
    """Leading minors by the three-term recurrence; checked against D^_m/D_m."""
    out = []
    prev2, prev1 = Fraction(1), Fraction(1)
    for i, e in enumerate(jsf.e):
        cur = e * prev1 - (jsf.d[i] * prev2 if i > 0 else 0)
        out.append(cur)
        prev2, prev1 = prev1, cur
    if ledger is not None:
        for m, v in enumerate(out, start=1):
            if ledger.d(m) == 0:
                raise SingularMinor(f"D_{m} = 0")
            if v != ledger.dhat(m) / ledger.d(m):
                raise ConsistencyError(f"Jacobi minor {m} disagrees with D^_m/D_m")
    return tuple(out)
