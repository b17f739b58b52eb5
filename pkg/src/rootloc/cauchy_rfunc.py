"""Sign counts, Cauchy indices, R-function classification and moments.

All counts come from exact Hankel minors; the Sturm-sequence helpers here
are used for the interlacing and reality conditions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    BothZero, InsufficientData, NotRFunction, ZeroDenominator, DegreeMismatch, ConsistencyError,
)
from .matrix import minor_table
from .poly_core import (
    Polynomial, divmod_poly, derivative, evaluate, exact_div, gcd, multiplicity, sign,
)
from .series_hankel import LaurentPrefix, MinorLedger, laurent_prefix, minor_ledger, hankel_minors
from . import contfrac


# ---- sign changes ----

def sc_strong(t: Sequence) -> int:
    """SC^-: sign changes after dropping zeros."""
    signs = [sign(x) for x in t if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sc_weak(t: Sequence) -> int:
    """SC^+: maximal number of changes over all signs given to the zeros."""
    n = len(t)
    idx = [i for i, x in enumerate(t) if x != 0]
    if not idx:
        return max(n - 1, 0)
    total = idx[0] + (n - 1 - idx[-1])  # leading and trailing zero runs
    for i, j in zip(idx, idx[1:]):
        gap = j - i          # steps between the two nonzeros
        differ = sign(t[i]) != sign(t[j])
        # parity of changes over the segment is fixed by the end signs
        total += gap if (gap % 2 == 1) == differ else gap - 1
    return total


def frobenius_signs(t: Sequence) -> Optional[list]:
    """Signs after the Frobenius assignment sgn t_{i+v} = (-1)^{v(v-1)/2} sgn t_i."""
    if not t or t[0] == 0:
        return None
    out = []
    last = 0
    run = 0
    for x in t:
        if x != 0:
            last = sign(x)
            run = 0
            out.append(last)
        else:
            run += 1
            out.append(last if (run * (run - 1) // 2) % 2 == 0 else -last)
    return out


def scf(t: Sequence) -> int:
    """Frobenius sign changes."""
    s = frobenius_signs(t)
    if s is None:
        raise ValueError("Frobenius count needs a nonzero first term")
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


@dataclass(frozen=True)
class SignTally:
    sequence: tuple
    sc_strong: int
    sc_weak: int
    sr_strong: int
    sr_weak: int
    sc_frobenius: Optional[int] = None
    sr_frobenius: Optional[int] = None


def sign_tally(t: Sequence) -> SignTally:
    t = tuple(Fraction(x) for x in t)
    if not t:
        raise ValueError("empty sequence")
    n = len(t) - 1
    scs, scw = sc_strong(t), sc_weak(t)
    f = frobenius_signs(t)
    scfv = None if f is None else sum(1 for a, b in zip(f, f[1:]) if a != b)
    return SignTally(t, scs, scw, n - scs, n - scw,
                     scfv, None if scfv is None else n - scfv)


# ---- Sturm sequences and exact root isolation ----

def sturm_sequence(f: Polynomial):
    seq = [f, derivative(f)]
    while not seq[-1].is_zero():
        r = divmod_poly(seq[-2], seq[-1])[1]
        seq.append(-r)
    return seq[:-1]


def _variations(seq, x) -> int:
    vals = [evaluate(g, x) for g in seq]
    return sc_strong(vals)


def _variations_inf(seq, at_plus: bool) -> int:
    vals = []
    for g in seq:
        lc = g.lead
        vals.append(lc if at_plus or g.degree % 2 == 0 else -lc)
    return sc_strong(vals)


def squarefree_part(f: Polynomial) -> Polynomial:
    if f.degree < 1:
        return f
    return exact_div(f, gcd(f, derivative(f)))


def count_distinct_real_roots(f: Polynomial, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; None means the corresponding infinity."""
    if f.is_zero():
        raise ZeroDenominator("zero polynomial")
    if f.degree < 1:
        return 0
    seq = sturm_sequence(squarefree_part(f))
    vlo = _variations_inf(seq, False) if lo is None else _variations(seq, Fraction(lo))
    vhi = _variations_inf(seq, True) if hi is None else _variations(seq, Fraction(hi))
    return vlo - vhi


def root_bound(f: Polynomial) -> Fraction:
    return 1 + max((abs(c / f.lead) for c in f.coeffs[1:]), default=Fraction(0))


def isolate_real_roots(f: Polynomial):
    """Disjoint half-open intervals (lo, hi], one distinct real root each, sorted."""
    if f.degree < 1:
        return []
    g = squarefree_part(f)
    seq = sturm_sequence(g)
    B = root_bound(g)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        cnt = _variations(seq, lo) - _variations(seq, hi)
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return out


def has_only_real_zeros(f: Polynomial) -> bool:
    if f.degree < 1:
        return True
    return count_distinct_real_roots(f) == squarefree_part(f).degree


def interlacing(p: Polynomial, q: Polynomial) -> bool:
    """Zeros of p and q real, simple and strictly alternating."""
    if p.is_zero() or q.is_zero():
        return False
    for f in (p, q):
        if f.degree >= 1 and (squarefree_part(f).degree != f.degree or not has_only_real_zeros(f)):
            return False
    if abs(p.degree - q.degree) > 1:
        return False
    if gcd(p, q).degree > 0:
        return False
    pq = p * q
    labels = []
    for lo, hi in isolate_real_roots(pq):
        in_p = p.degree >= 1 and count_distinct_real_roots(p, lo, hi) == 1
        labels.append("p" if in_p else "q")
    return all(a != b for a, b in zip(labels, labels[1:]))


def wronskian(p: Polynomial, q: Polynomial) -> Polynomial:
    """p q' - p' q."""
    return p * derivative(q) - derivative(p) * q


def condition_real_wronskian(p: Polynomial, q: Polynomial) -> bool:
    """p, q real-rooted and p q' - p' q < 0 on the whole real line."""
    if p.is_zero() or q.is_zero():
        return False
    if not (has_only_real_zeros(p) and has_only_real_zeros(q)):
        return False
    W = wronskian(p, q)
    if W.is_zero():
        return False
    return count_distinct_real_roots(W) == 0 and evaluate(W, 0) < 0


def condition_interlacing(p: Polynomial, q: Polynomial) -> bool:
    """Interlacing zeros plus p q' - p' q < 0 at one point."""
    if not interlacing(p, q):
        return False
    return evaluate(wronskian(p, q), 0) < 0 or evaluate(wronskian(p, q), 1) < 0


# ---- Cauchy indices ----

@dataclass(frozen=True)
class CauchyIndexReport:
    ind_real_line: int
    ind_negative_halfline: int
    ind_positive_halfline: int
    ind_at_infinity: int
    ind_projective: int


def _reduced(p: Polynomial, q: Polynomial):
    g = gcd(p, q)
    return exact_div(p, g), exact_div(q, g)


def index_at_infinity(head: Polynomial) -> int:
    """Index at infinity of the polynomial part c z^v + ...: -sgn c for odd v."""
    if head.degree >= 1 and head.degree % 2 == 1:
        return -sign(head.lead)
    return 0


def cauchy_index(p: Polynomial, q: Polynomial) -> CauchyIndexReport:
    if p.is_zero():
        raise ZeroDenominator("denominator p is the zero polynomial")
    head, q1 = divmod_poly(q, p)
    ind_inf = index_at_infinity(head)
    if q1.is_zero() or p.degree == 0:
        return CauchyIndexReport(0, 0, 0, ind_inf, ind_inf)
    led = minor_ledger(p, q1)
    r = led.rank
    D = [Fraction(1)] + [led.d(j) for j in range(1, r + 1)]
    Dh = [Fraction(1)] + [led.dhat(j) for j in range(1, r + 1)]
    scf_d = scf(D)
    ind_real = r - 2 * scf_d
    ph, qh = _reduced(p, q1)
    nu = multiplicity(ph, 0)
    if nu == 0:
        scf_dh = scf(Dh)
        ind_pos = r - (scf_d + scf_dh)
        ind_neg = scf_dh - scf_d
    else:
        rest = exact_div(ph, Polynomial.monomial(nu))
        s1 = sign(evaluate(qh, 0) / evaluate(rest, 0))
        s2 = s1 if nu % 2 == 1 else -s1
        scf_dh = scf(Dh[:r])   # through D^_{r-1}
        ind_pos = r - (1 + s1) // 2 - (scf_d + scf_dh)
        ind_neg = (1 - s2) // 2 + scf_dh - scf_d
    return CauchyIndexReport(ind_real, ind_neg, ind_pos, ind_inf, ind_real + ind_inf)


def index_from_fraction(fr) -> int:
    """r - 2m, m = negative alpha_j (minus chain) or negative odd c's."""
    if isinstance(fr, contfrac.JFraction):
        mj = contfrac.convert(fr, contfrac.MINUS)
        return len(mj.alpha) - 2 * sum(1 for a in mj.alpha if a < 0)
    if isinstance(fr, contfrac.StieltjesFraction):
        odd = fr.c[0::2]
        return len(odd) - 2 * sum(1 for c in odd if c < 0)
    raise TypeError(f"no index rule for {type(fr).__name__}")


# ---- R-functions ----

DEGREE_GAP = "degree_gap"
HEAD_SIGN = "head_sign"
GROMMER = "grommer_minors"
GCD_REALITY = "gcd_reality"
CONSTANT = "constant_function"


@dataclass(frozen=True)
class RFunctionVerdict:
    is_r_negative_type: bool
    failed_condition: Optional[str]
    pole_count: int
    negative_poles: Optional[int] = None
    positive_poles: Optional[int] = None
    zero_pole: bool = False
    head_alpha: Fraction = Fraction(0)
    head_beta: Fraction = Fraction(0)


def classify_r_function(p: Polynomial, q: Polynomial) -> RFunctionVerdict:
    """Is q/p an R-function of negative type (maps the upper half-plane down)?"""
    if p.is_zero() and q.is_zero():
        raise BothZero("p and q are both zero")
    if p.is_zero():
        raise ZeroDenominator("denominator p is the zero polynomial")
    if q.is_zero():
        return RFunctionVerdict(False, CONSTANT, 0)
    # a proper fraction with deg q < deg p - 1 has s_0 = 0, so Grommer reports it
    if q.degree > p.degree + 1:
        return RFunctionVerdict(False, DEGREE_GAP, p.degree - gcd(p, q).degree)
    head, q1 = divmod_poly(q, p)
    alpha = -head.power_coef(1)
    beta = head.power_coef(0)
    led = minor_ledger(p, q1)
    r = led.rank
    if alpha < 0:
        return RFunctionVerdict(False, HEAD_SIGN, r, head_alpha=alpha, head_beta=beta)
    if r == 0 and alpha == 0:
        return RFunctionVerdict(False, CONSTANT, 0, head_alpha=alpha, head_beta=beta)
    if any(led.d(j) <= 0 for j in range(1, r + 1)):
        return RFunctionVerdict(False, GROMMER, r, head_alpha=alpha, head_beta=beta)
    if not has_only_real_zeros(gcd(p, q)):
        return RFunctionVerdict(False, GCD_REALITY, r, head_alpha=alpha, head_beta=beta)
    zp = r > 0 and led.dhat(r) == 0
    if r > 0:
        jf = contfrac.j_fraction(p, q1, contfrac.MINUS)
        if not all(a > 0 for a in jf.alpha):
            raise ConsistencyError("Grommer minors positive but a J-fraction alpha is not")
    k = r - 1 if zp else r
    rneg = scf([Fraction(1)] + [led.dhat(j) for j in range(1, k + 1)])
    rpos = r - rneg - (1 if zp else 0)
    return RFunctionVerdict(True, None, r, rneg, rpos, zp, alpha, beta)


def lienard_chipart_positive_poles(p: Polynomial, q: Polynomial) -> int:
    """SC^-(a_0, ..., a_n) for an R-function q/p with exactly deg p poles."""
    v = classify_r_function(p, q)
    if not v.is_r_negative_type or v.pole_count != p.degree:
        raise NotRFunction("q/p must be an R-function with deg p poles")
    out = sc_strong(p.coeffs)
    if out != v.positive_poles:
        raise ConsistencyError("coefficient sign count disagrees with the minor count")
    return out


STP = "strictly_totally_positive"
SIGN_REGULAR = "sign_regular"
NEITHER = "neither"


def hankel_positivity_class(p: Polynomial, q: Polynomial, max_order: int = 4) -> str:
    """Minor-sign class of S = [s_{i+j}] up to order min(r, max_order) in a 2r window."""
    if q.degree >= p.degree:
        raise DegreeMismatch("needs deg q < deg p")
    if q.is_zero():
        return NEITHER
    led = minor_ledger(p, q)
    r = led.rank
    W = 2 * r
    s = laurent_prefix(p, q, 2 * W)
    S = [[s.at(i + j) for j in range(W)] for i in range(W)]
    table = minor_table(S, min(r, max_order))
    all_pos = True
    all_sr = True
    for (rows, cols), v in table.raw.items():
        if v <= 0:
            all_pos = False
        par = (sum(rows) + sum(cols)) % 2
        if (v if par == 0 else -v) <= 0:
            all_sr = False
        if not all_pos and not all_sr:
            return NEITHER
    if all_pos:
        return STP
    return SIGN_REGULAR if all_sr else NEITHER


# ---- finite moment problem ----

@dataclass(frozen=True)
class MomentSolution:
    feasible: bool
    n: int
    k_negative_nodes: Optional[int] = None
    node_polynomial: Optional[Polynomial] = None
    weight_function: Optional[tuple] = None     # (p, q): residues of q/p are the weights
    reason: str = ""


def moment_prefix(s: Sequence) -> LaurentPrefix:
    vals = (Fraction(0),) + tuple(Fraction(x) for x in s)
    return LaurentPrefix(vals, Polynomial.zero(), Polynomial.zero())


def solve_moment_problem(s: Sequence, n: int) -> MomentSolution:
    """s_i = sum_j g_j w_j^i with g_j > 0, n distinct real nodes w_j."""
    s = tuple(Fraction(x) for x in s)
    if n < 1:
        raise InsufficientData("n must be positive")
    if len(s) < 2 * n + 1:
        raise InsufficientData(f"need at least {2 * n + 1} moments, got {len(s)}")
    pre = moment_prefix(s)
    D, Dh = hankel_minors(pre, n)
    for j, v in enumerate(D, start=1):
        if v <= 0:
            return MomentSolution(False, n, reason=f"D_{j} = {v} is not positive")
    led = MinorLedger(D, Dh, n)
    P = contfrac.partial_denominator(pre, led, n)
    # rank n: every available moment obeys the recurrence of the node polynomial
    pc = P.ascending()
    for t in range(0, len(s) - n):
        acc = sum(pc[i] * s[t + i] for i in range(n + 1))
        if acc != 0:
            return MomentSolution(False, n, reason=f"rank exceeds {n} (recurrence fails at s_{t + n})")
    Q = contfrac.partial_numerator(pre, P)
    k = scf((Fraction(1),) + tuple(Dh))
    return MomentSolution(True, n, k, P, (P, Q), "feasible")
