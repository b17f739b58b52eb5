"""Root counting through the logarithmic derivative L = p'/p.

The Laurent coefficients of L are the Newton sums of p, so the Hankel
minors of L locate the distinct zeros of p. Every count is computed twice:
once from D_j(L), D^_j(L) and once from the minors of D_2n(p).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import ConsistencyError, NotRealRooted, PreconditionError
from .poly_core import Polynomial, derivative, evaluate, gcd, squarefree_factors
from .series_hankel import LaurentPrefix, laurent_prefix, minor_ledger
from .hurwitz import d_infinity, delta_minors, find_negative_minor, MinorViolation
from .cauchy_rfunc import scf, sc_strong
from . import contfrac


def _need_degree(p: Polynomial):
    if p.degree < 1:
        raise PreconditionError("deg p must be at least 1")


def _positive_lead(p: Polynomial) -> Polynomial:
    return -p if p.lead < 0 else p


def newton_sums(p: Polynomial, count: Optional[int] = None) -> LaurentPrefix:
    """Prefix of p'/p; s_k is the k-th power sum of the zeros."""
    _need_degree(p)
    return laurent_prefix(p, derivative(p), count)


@dataclass(frozen=True)
class DeltaLedger:
    delta: tuple        # delta_1 .. delta_2n

    def at(self, j: int) -> Fraction:
        """delta_j with delta_0 = 1."""
        return Fraction(1) if j == 0 else self.delta[j - 1]


def delta_ledger(p: Polynomial) -> DeltaLedger:
    """Leading principal minors of D_2n(p) = H_2n(p, p')."""
    _need_degree(p)
    return DeltaLedger(delta_minors(p, derivative(p)))


@dataclass(frozen=True)
class RootCountReport:
    m_distinct: int
    k_nonreal_pairs: int
    r_distinct_real: int
    r_plus: int
    r_minus: int
    zero_is_root: bool
    positive_with_multiplicity: int


def _distinct_count(p: Polynomial) -> int:
    return p.degree - gcd(p, derivative(p)).degree


def _hankel_counts(p: Polynomial):
    """(m, k, r_plus, r_minus, zero) from the minors of L."""
    led = minor_ledger(p, derivative(p))
    m = led.rank
    if m != _distinct_count(p):
        raise ConsistencyError("rank of L differs from deg p - deg gcd(p, p')")
    if led.d(m) == 0 or any(x != 0 for x in led.D[m:]):
        raise ConsistencyError(f"Kronecker conditions fail for L at rank {m}")
    zero = evaluate(p, 0) == 0
    k = scf([Fraction(1)] + list(led.D[:m]))
    l = scf([Fraction(1)] + list(led.Dhat[:m]))
    r = m - 2 * k
    r_minus = l - k
    r_plus = m - k - l - (1 if zero else 0)
    return m, k, r, r_plus, r_minus, zero


def _delta_counts(p: Polynomial, m: int, zero: bool):
    """Same counts from delta_j(p); the even-index sequence mirrors D^_j(L)."""
    dl = delta_ledger(_positive_lead(p))
    if dl.at(2 * m - 1) == 0 or any(x != 0 for x in dl.delta[2 * m:]):
        raise ConsistencyError("delta minors do not vanish past 2m")
    k = scf([Fraction(1)] + [dl.at(2 * j - 1) for j in range(1, m + 1)])
    l = scf([Fraction(1)] + [dl.at(2 * j) for j in range(1, m + 1)])
    r_plus = l - k
    r_minus = m - k - l - (1 if zero else 0)
    return k, m - 2 * k, r_plus, r_minus


def _positive_roots_simple(f: Polynomial) -> int:
    """Distinct positive zeros of f."""
    if f.degree < 1:
        return 0
    return _hankel_counts(f)[3]


def count_roots(p: Polynomial) -> RootCountReport:
    _need_degree(p)
    m, k, r, r_plus, r_minus, zero = _hankel_counts(p)
    dk, dr, dplus, dminus = _delta_counts(p, m, zero)
    if (dk, dr, dplus, dminus) != (k, r, r_plus, r_minus):
        raise ConsistencyError(
            f"Hankel route {(k, r, r_plus, r_minus)} and delta route {(dk, dr, dplus, dminus)} disagree")
    if r != r_plus + r_minus + (1 if zero else 0) or not 0 <= k <= m // 2:
        raise ConsistencyError("root count invariants violated")
    pos = sum(mult * _positive_roots_simple(f) for f, mult in squarefree_factors(p))
    return RootCountReport(m, k, r, r_plus, r_minus, zero, pos)


@dataclass(frozen=True)
class RealRootedVerdict:
    verdict: bool
    m: int


def real_rooted(p: Polynomial) -> RealRootedVerdict:
    """All zeros real iff D_j(L) > 0 for j <= m (and zero beyond, by rank)."""
    _need_degree(p)
    led = minor_ledger(p, derivative(p))
    m = led.rank
    ok = all(led.d(j) > 0 for j in range(1, m + 1))
    dl = delta_ledger(_positive_lead(p))
    by_delta = all(dl.at(2 * j - 1) > 0 for j in range(1, m + 1))
    if ok != by_delta:
        raise ConsistencyError("Hankel and delta reality criteria disagree")
    return RealRootedVerdict(ok, m)


@dataclass(frozen=True)
class NegativityVerdict:
    verdict: bool
    m: int
    witness: Optional[MinorViolation] = None


def all_zeros_negative(p: Polynomial, witness_window: int = 8, witness_order: int = 3) -> NegativityVerdict:
    """All zeros real and negative iff delta_1, ..., delta_2m are all positive.

    On a false verdict a negative minor of a D_inf truncation is searched for
    (principal minors first); it may be absent if the window is too small.
    """
    _need_degree(p)
    p = _positive_lead(p)
    m = _distinct_count(p)
    dl = delta_ledger(p)
    ok = all(dl.at(j) > 0 for j in range(1, 2 * m + 1))
    wit = None
    if not ok:
        M = d_infinity(p.ascending(), witness_window).matrix()
        wit = find_negative_minor(M, witness_order)
    return NegativityVerdict(ok, m, wit)


def all_zeros_negative_ascending(coeffs: Sequence, witness_window: int = 8,
                                 witness_order: int = 3) -> NegativityVerdict:
    """Entry point for g(z) = a_0 + a_1 z + ... + a_n z^n given as (a_0, ..., a_n)."""
    return all_zeros_negative(Polynomial.from_ascending(coeffs), witness_window, witness_order)


def only_nonpositive_zeros(p: Polynomial) -> bool:
    """All zeros real and <= 0 (true for nonzero constants)."""
    if p.is_zero():
        raise PreconditionError("zero polynomial")
    if p.degree < 1:
        return True
    rep = count_roots(p)
    return rep.k_nonreal_pairs == 0 and rep.r_plus == 0


def positive_root_count_descartes(p: Polynomial) -> int:
    """For real-rooted p the coefficient sign changes count positive zeros exactly."""
    if not real_rooted(p).verdict:
        raise NotRealRooted("p has nonreal zeros; the sign-change count is only a bound")
    return sc_strong(p.coeffs)


def log_derivative_stieltjes(p: Polynomial) -> Union[contfrac.StieltjesFraction, contfrac.NotStieltjes]:
    """Stieltjes fraction of p'/p, checked against c_i = d_{i-1}^2 / (d_{i-2} d_i)."""
    _need_degree(p)
    fr = contfrac.stieltjes_fraction(p, derivative(p))
    if isinstance(fr, contfrac.NotStieltjes):
        return fr
    dl = delta_ledger(p)

    def dd(j):
        return 1 / p.lead if j == -1 else dl.at(j)
    for i, c in enumerate(fr.c, start=1):
        if c != dd(i - 1) ** 2 / (dd(i - 2) * dd(i)):
            raise ConsistencyError(f"Stieltjes coefficient c_{i} disagrees with the delta ratio")
    return fr


def coefficient_subsequence(p: Polynomial, r: int, l: int) -> Polynomial:
    """a_0 + a_r z + a_2r z^2 + ... + a_rl z^l, with a_0 the leading coefficient of p."""
    n = p.degree
    if r < 1 or l < 1 or not (r * l <= n < (l + 1) * r):
        raise PreconditionError("need positive r, l with r*l <= n < (l+1)*r")
    return Polynomial.from_ascending([p.coeffs[j * r] for j in range(l + 1)])
