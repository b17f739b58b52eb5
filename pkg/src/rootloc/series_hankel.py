"""Laurent prefixes of q/p at infinity and their Hankel minors.

R(z) = q(z)/p(z) = s_{-1} + s_0/z + s_1/z^2 + ...

D_j  = det [s_{i+k}]_{i,k=0..j-1},   D^_j = det [s_{1+i+k}]_{i,k=0..j-1},
with D_0 = D^_0 = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegreeMismatch, InsufficientPrefix, ZeroDenominator, ConsistencyError
from .matrix import det, leading_principal_minors
from .poly_core import Polynomial, gcd, evaluate


@dataclass(frozen=True)
class LaurentPrefix:
    s: tuple            # s_{-1}, s_0, ..., s_N
    source_p: Polynomial
    source_q: Polynomial

    def at(self, j: int) -> Fraction:
        """s_j for j >= -1."""
        k = j + 1
        if k < 0 or k >= len(self.s):
            raise InsufficientPrefix(f"s_{j} not in prefix of length {len(self.s)}")
        return self.s[k]

    @property
    def top(self) -> int:
        """Largest available index N."""
        return len(self.s) - 2

    def tail(self):
        """(s_0, s_1, ...) without the head term."""
        return self.s[1:]


@dataclass(frozen=True)
class MinorLedger:
    D: tuple            # D_1, D_2, ...
    Dhat: tuple         # D^_1, D^_2, ...
    rank: Optional[int] = None

    def d(self, j: int) -> Fraction:
        """D_j with D_0 = 1 (and D_{-1} = 1 for the d-law)."""
        return Fraction(1) if j <= 0 else self.D[j - 1]

    def dhat(self, j: int) -> Fraction:
        return Fraction(1) if j <= 0 else self.Dhat[j - 1]


def _check_pair(p: Polynomial, q: Polynomial):
    if p.is_zero():
        raise ZeroDenominator("denominator p is the zero polynomial")
    if q.degree > p.degree:
        raise DegreeMismatch(f"deg q = {q.degree} exceeds deg p = {p.degree}")


def default_count(p: Polynomial) -> int:
    return 2 * p.degree + 2


def laurent_prefix(p: Polynomial, q: Polynomial, count: Optional[int] = None) -> LaurentPrefix:
    """s_{-1}, ..., s_{count-1} from b_j = a_0 s_{j-1} + ... + a_j s_{-1}."""
    _check_pair(p, q)
    if count is None:
        count = default_count(p)
    if count < 0:
        raise ValueError("count must be nonnegative")
    n = p.degree
    a = p.coeffs
    b = q.padded(n)
    a0 = a[0]
    s = []
    for j in range(count + 1):
        bj = b[j] if j <= n else Fraction(0)
        acc = bj
        for i in range(1, min(j, n) + 1):
            acc -= a[i] * s[j - i]
        s.append(acc / a0)
    return LaurentPrefix(tuple(s), p, q)


def _need(s: LaurentPrefix, top: int):
    if s.top < top:
        raise InsufficientPrefix(f"need s_{top}, prefix ends at s_{s.top}")


def hankel_block(s: LaurentPrefix, j: int, shift: int = 0):
    return [[s.at(shift + i + k) for k in range(j)] for i in range(j)]


def hankel_minor_D(s: LaurentPrefix, j: int) -> Fraction:
    if j <= 0:
        return Fraction(1)
    _need(s, 2 * j - 2)
    return det(hankel_block(s, j))


def hankel_minor_Dhat(s: LaurentPrefix, j: int) -> Fraction:
    if j <= 0:
        return Fraction(1)
    _need(s, 2 * j - 1)
    return det(hankel_block(s, j, 1))


def hankel_minors(s: LaurentPrefix, upto: int):
    """(D_1..D_upto, D^_1..D^_upto) in one pass each."""
    if upto <= 0:
        return (), ()
    _need(s, 2 * upto - 1)
    D = leading_principal_minors(hankel_block(s, upto), upto)
    Dh = leading_principal_minors(hankel_block(s, upto, 1), upto)
    return tuple(D), tuple(Dh)


def pole_count(p: Polynomial, q: Polynomial) -> int:
    """Number of poles of q/p counted with multiplicity: deg p - deg gcd."""
    if p.is_zero():
        raise ZeroDenominator("denominator p is the zero polynomial")
    if q.is_zero():
        return 0
    return p.degree - gcd(p, q).degree


def minor_ledger(p: Polynomial, q: Polynomial, upto: Optional[int] = None) -> MinorLedger:
    """D_j and D^_j for j = 1..upto (default deg p + 1) plus the pole count."""
    _check_pair(p, q)
    if upto is None:
        upto = p.degree + 1
    s = laurent_prefix(p, q, 2 * upto)
    D, Dh = hankel_minors(s, upto)
    return MinorLedger(D, Dh, pole_count(p, q))


def hankel_rank(p: Polynomial, q: Polynomial) -> int:
    """r = deg p - deg gcd(p, q), checked against the Kronecker conditions."""
    _check_pair(p, q)
    r = pole_count(p, q)
    led = minor_ledger(p, q)
    if led.d(r) == 0 or any(x != 0 for x in led.D[r:]):
        raise ConsistencyError(f"Kronecker conditions fail for rank {r}: D = {led.D}")
    return r


def pole_at_zero(p: Polynomial, q: Polynomial) -> bool:
    """True iff D^_{r-1} != 0 and D^_j = 0 for j >= r."""
    _check_pair(p, q)
    led = minor_ledger(p, q)
    r = led.rank
    if r == 0:
        by_minors = False
    else:
        by_minors = led.dhat(r - 1) != 0 and all(x == 0 for x in led.Dhat[r - 1:])
    by_roots = evaluate(p, 0) == 0 and (q.is_zero() is False) and evaluate(gcd(p, q), 0) != 0
    if by_minors != by_roots:
        raise ConsistencyError("zero-pole criterion disagrees with direct evaluation")
    return by_minors


def nabla_matrix(p: Polynomial, q: Polynomial, j: int):
    """2j x 2j matrix whose row pairs are (a_{c-i}, b_{c-i}), b padded to deg p."""
    n = max(p.degree, q.degree, 0)
    a = p.padded(n) if not p.is_zero() else (Fraction(0),) * (n + 1)
    b = q.padded(n) if not q.is_zero() else (Fraction(0),) * (n + 1)

    def at(seq, k):
        return seq[k] if 0 <= k <= n else Fraction(0)

    M = []
    for i in range(j):
        M.append([at(a, c - i) for c in range(2 * j)])
        M.append([at(b, c - i) for c in range(2 * j)])
    return M


def nabla_minor(p: Polynomial, q: Polynomial, j: int) -> Fraction:
    if j < 1:
        raise ValueError("j must be >= 1")
    return det(nabla_matrix(p, q, j))
