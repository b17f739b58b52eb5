"""Resultants, discriminants and Orlando-type product identities.

The pair-sum products over zeros of h(z) = p(z^2) + z q(z^2) are never
computed from roots; they are reached through resultants of exactly known
polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegreeOrder, PreconditionError
from .matrix import det
from .poly_core import (
    Polynomial, compose_square_pair, substitute_square, reflect, shift_up, evaluate, split_even_odd,
)
from .series_hankel import nabla_minor
from .hurwitz import discriminant_matrix, hurwitz_poly_minors

DETERMINANT = "determinant"
NABLA = "nabla_reduction"


@dataclass(frozen=True)
class ResultantReport:
    value: Fraction
    method: str
    n: int
    m: int


def sylvester_matrix(p: Polynomial, q: Polynomial):
    """m shifted rows of p's coefficients, then n shifted rows of q's."""
    n, m = p.degree, q.degree
    size = n + m
    rows = []
    for i in range(m):
        rows.append([p.coef(c - i) for c in range(size)])
    for i in range(n):
        rows.append([q.coef(c - i) for c in range(size)])
    return rows


def _check(p: Polynomial, q: Polynomial):
    if p.degree < 1:
        raise PreconditionError("deg p must be at least 1")
    if q.is_zero():
        raise PreconditionError("q must be nonzero")
    if q.degree > p.degree:
        raise DegreeOrder("deg q exceeds deg p; swap and use R(p,q) = (-1)^{nm} R(q,p)")


def resultant(p: Polynomial, q: Polynomial, method: str = DETERMINANT) -> ResultantReport:
    _check(p, q)
    n, m = p.degree, q.degree
    if method == DETERMINANT:
        val = det(sylvester_matrix(p, q))
    elif method == NABLA:
        sgn = -1 if (n * (n - 1) // 2) % 2 else 1
        val = sgn * p.lead ** (m - n) * nabla_minor(p, q, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ResultantReport(val, method, n, m)


def resultant_any(p: Polynomial, q: Polynomial) -> Fraction:
    """Sylvester resultant for any degree order (both degrees >= 0, not both 0)."""
    if p.is_zero() or q.is_zero():
        raise PreconditionError("resultant with the zero polynomial")
    return det(sylvester_matrix(p, q))


def discriminant(p: Polynomial) -> Fraction:
    """det of the leading (2n-1)-block of D_2n(p), divided by a_0."""
    n = p.degree
    if n < 1:
        raise PreconditionError("deg p must be at least 1")
    M = discriminant_matrix(p).matrix(2 * n - 1)
    return det(M) / p.lead


@dataclass(frozen=True)
class OrlandoRecord:
    resultant: Fraction          # left side R(p, q)
    product: Fraction            # pair-sum product implied by the stated sign
    branch: str                  # "even" (h = p(z^2)+zq(z^2)) or "odd" (g = q(z^2)+zp(z^2))
    square_lhs: Fraction         # R(p,q)^2
    square_rhs: Fraction         # a_0^{2m} prod q(z_k^2), via Res(h, q(z^2))
    pair_square: Optional[Fraction]  # (prod pair sums)^2 from Res(h(z), h(-z)); None when h(0) = 0

    @property
    def balanced(self) -> bool:
        ok = self.square_lhs == self.square_rhs
        if self.pair_square is not None:
            ok = ok and self.product ** 2 == self.pair_square
        return ok


def orlando_sign(n: int, branch: str) -> int:
    """Sign in front of a_0^{m+n} prod(z_i + z_k).

    odd branch: (-1)^{n(n-1)/2}. even branch: (-1)^{n(n+1)/2}; this is the
    sign the h = (z-1)^{2n} calibration produces and the one that holds on
    constructed-root fixtures.
    """
    e = n * (n + 1) // 2 if branch == "even" else n * (n - 1) // 2
    return -1 if e % 2 else 1


def pair_sum_square(h: Polynomial) -> Optional[Fraction]:
    """(prod_{i<k} (z_i + z_k))^2 over the zeros of h, or None if h(0) = 0.

    Res(h(z), h(-z)) = lead^{2N} (-2)^N (prod_k z_k) (prod_{i<k}(z_i+z_k))^2
    with prod_k z_k = (-1)^N h(0)/lead.
    """
    N = h.degree
    h0 = evaluate(h, 0)
    if h0 == 0:
        return None
    lead = h.lead
    res = resultant_any(h, reflect(h))
    prod_z = (-1) ** N * h0 / lead
    denom = lead ** (2 * N) * (-2) ** N * prod_z
    return res / denom


def orlando_general(p: Polynomial, q: Polynomial, branch: Optional[str] = None) -> OrlandoRecord:
    """Both sides of the generalized Orlando identity.

    even branch (deg q <= n-1): R(p,q) = (-1)^{n(n+1)/2} a_0^{m+n} prod over 2n zeros of h
    odd branch  (deg q <= n):   R(p,q) = (-1)^{n(n-1)/2} a_0^{m+n} prod over 2n+1 zeros
                                of g = q(z^2) + z p(z^2)
    """
    if q.is_zero():
        raise PreconditionError("q = 0: degree m undefined")
    n, m = p.degree, q.degree
    if branch is None:
        branch = "even" if m <= n - 1 else "odd"
    if branch == "even" and m > n - 1:
        raise DegreeOrder("even branch needs deg q <= deg p - 1")
    if branch == "odd" and m > n:
        raise DegreeOrder("odd branch needs deg q <= deg p")
    R = resultant(p, q).value
    a0 = p.lead
    product = R / (orlando_sign(n, branch) * a0 ** (m + n))
    if branch == "even":
        h = compose_square_pair(p, q)
        # R^2 = a_0^{2m} prod_k q(z_k^2) = Res(h(z), q(z^2))
        sq_rhs = resultant_any(h, substitute_square(q))
    else:
        h = compose_square_pair(q, p)
        # G(u) = g(z)g(-z) = q(u)^2 - u p(u)^2 is q^2 modulo p, so
        # R^2 = Res(p, q^2) = a_0^{2m-2n-1} Res(p, G)
        G = q * q - shift_up(p * p)
        sq_rhs = a0 ** (2 * m - 2 * n - 1) * resultant_any(p, G)
    ps = pair_sum_square(h)
    return OrlandoRecord(R, product, branch, R * R, sq_rhs, ps)


def orlando_classical(p: Polynomial) -> Fraction:
    """Delta_{n-1}(p), equal to (-1)^{n(n-1)/2} a_0^{n-1} prod_{i<j}(z_i+z_j)."""
    n = p.degree
    if n < 2:
        raise PreconditionError("deg p must be at least 2")
    return hurwitz_poly_minors(p)[n - 2]


def orlando_via_split(p: Polynomial) -> Fraction:
    """Delta_{n-1}(p) from the even/odd split and a nabla determinant."""
    n = p.degree
    p0, p1 = split_even_odd(p)
    l = n // 2
    if l == 0:
        raise PreconditionError("deg p must be at least 2")
    if n % 2:
        return (-1) ** l * nabla_minor(p1, p0, l)
    return nabla_minor(p0, p1, l) / p.lead
