"""Oracles and brute-force cross-checks.

Ground truth always comes from known root data (RootSpec), never from
numeric root finding. The helpers here deliberately avoid the library's
own Hankel/recurrence machinery so they can serve as independent checks.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import PreconditionError, ZeroDenominator
from .hurwitz import BandMatrixView, MinorViolation, find_negative_minor
from .poly_core import (
    Polynomial, RootSpec, divmod_poly, evaluate, exact_div, from_root_spec, parse_root_spec, poly,
)


# ---- bounded minor enumeration ----

@dataclass(frozen=True)
class MinorEnumConfig:
    max_order: int = 4
    window: int = 10


def enumerate_minors(view: BandMatrixView, cfg: MinorEnumConfig = MinorEnumConfig()) -> Optional[MinorViolation]:
    """First negative minor in the leading window (principal minors first), or None."""
    if view.truncation is not None and view.truncation < cfg.window:
        raise PreconditionError(f"truncation {view.truncation} is smaller than the window {cfg.window}")
    return find_negative_minor(view.matrix(cfg.window), cfg.max_order)


def identity_view(size: int) -> BandMatrixView:
    return BandMatrixView("identity", (), lambda i, c: Fraction(int(i == c)), size)


# ---- series by explicit long division ----

def series_by_long_division(p: Polynomial, q: Polynomial, count: int) -> tuple:
    """s_{-1}, ..., s_{count-1} of q/p read off the quotient of q z^count by p."""
    if p.is_zero():
        raise ZeroDenominator("denominator p is the zero polynomial")
    if q.degree > p.degree:
        raise PreconditionError("deg q must not exceed deg p")
    if q.is_zero():
        return (Fraction(0),) * (count + 1)
    quot, _ = divmod_poly(q * Polynomial.monomial(count), p)
    # q z^c / p = sum_j s_j z^{c-1-j}; the polynomial part holds j = -1 .. c-1
    return tuple(quot.power_coef(count - 1 - j) for j in range(-1, count))


# ---- random constructions ----

def random_rational(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_root_spec(rng: random.Random, max_degree: int = 8, max_mult: int = 3,
                     signs: str = "mixed", allow_zero: bool = True,
                     allow_quadratic: bool = True, simple: bool = False) -> RootSpec:
    """Random RootSpec of degree 1..max_degree.

    signs: "mixed", "negative" (all real roots < 0) or "positive" (> 0).
    """
    while True:
        used = set()
        roots = []
        for _ in range(rng.randint(0, max_degree)):
            z = random_rational(rng)
            if signs == "negative":
                z = -abs(z) or Fraction(-1)
            elif signs == "positive":
                z = abs(z) or Fraction(1)
            elif z == 0 and not allow_zero:
                continue
            if z in used:
                continue
            used.add(z)
            roots.append((z, 1 if simple else rng.randint(1, max_mult)))
        quads = []
        seen = set()
        if allow_quadratic:
            for _ in range(rng.randint(0, 2)):
                b = Fraction(rng.randint(-4, 4))
                c = b * b / 4 + rng.randint(1, 5)
                if (b, c) in seen:
                    continue
                seen.add((b, c))
                quads.append((b, c, 1 if simple else rng.randint(1, 2)))
        lead = Fraction(rng.choice([1, -1, 2, -3, 1, 1]))
        spec = RootSpec(tuple(roots), tuple(quads), lead)
        if 1 <= spec.degree <= max_degree:
            return spec


def random_poly(rng: random.Random, degree: int, lo: int = -9, hi: int = 9, monic_nonzero: bool = True) -> Polynomial:
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return Polynomial((Fraction(lead),) + tuple(Fraction(rng.randint(lo, hi)) for _ in range(degree)))


def random_pair(rng: random.Random, max_degree: int = 8, lo: int = -9, hi: int = 9, equal_allowed: bool = True):
    """Integer (p, q) with 1 <= deg p <= max_degree and deg q <= deg p (deg q < deg p if not equal_allowed)."""
    n = rng.randint(1, max_degree)
    p = random_poly(rng, n, lo, hi)
    m = rng.randint(0, n if equal_allowed else n - 1)
    q = random_poly(rng, m, lo, hi)
    return p, q


def interlacing_pair(rng: random.Random, n: int, shift: str = "mixed", q_degree: Optional[int] = None):
    """Simple integer roots p_1 < q_1 < p_2 < ..., returned as (p, q, p_roots, q_roots).

    q has a positive leading coefficient so that q/p is an R-function of
    negative type when deg q = n - 1 and the smallest root belongs to p.
    """
    m = n - 1 if q_degree is None else q_degree
    count = n + m
    if shift == "negative":
        pts = sorted(rng.sample(range(-4 * count - 4, 0), count))
    elif shift == "positive":
        pts = sorted(rng.sample(range(1, 4 * count + 5), count))
    else:
        pts = sorted(rng.sample(range(-2 * count - 2, 2 * count + 3), count))
    pts = [Fraction(x) for x in pts]
    pr = pts[0::2][:n]
    qr = pts[1::2][:m]
    p = from_root_spec(RootSpec(tuple((z, 1) for z in pr), (), Fraction(1)))
    q = from_root_spec(RootSpec(tuple((z, 1) for z in qr), (), Fraction(rng.randint(1, 3))))
    return p, q, pr, qr


# ---- oracles ----

@dataclass(frozen=True)
class RootCountOracle:
    m_distinct: int
    k_nonreal_pairs: int
    r_distinct_real: int
    r_plus: int
    r_minus: int
    zero_is_root: bool
    positive_with_multiplicity: int


def root_count_oracle(spec: RootSpec) -> RootCountOracle:
    real = {r for r, _ in spec.rational_roots}
    quads = {(b, c) for b, c, _ in spec.quadratic_factors}
    return RootCountOracle(
        len(real) + 2 * len(quads), len(quads), len(real),
        sum(1 for r in real if r > 0), sum(1 for r in real if r < 0), Fraction(0) in real,
        sum(m for r, m in spec.rational_roots if r > 0),
    )


def _order_at(f: Polynomial, x: Fraction):
    """(multiplicity of x as a zero of f, value of f/(z-x)^mult at x)."""
    k = 0
    lin = poly(1, -x)
    while evaluate(f, x) == 0:
        f = exact_div(f, lin)
        k += 1
    return k, evaluate(f, x)


@dataclass(frozen=True)
class IndexOracle:
    real_line: int
    negative: int
    positive: int


def cauchy_index_oracle(p: Polynomial, q: Polynomial, real_poles: Iterable[Fraction]) -> IndexOracle:
    """Index of q/p from its candidate real poles (all real zeros of p, exactly known).

    Each pole of odd order contributes the sign of its leading Laurent term.
    """
    tot = neg = pos = 0
    for x in set(Fraction(v) for v in real_poles):
        kp, vp = _order_at(p, x)
        if q.is_zero():
            continue
        kq, vq = _order_at(q, x)
        nu = kp - kq
        if nu <= 0 or nu % 2 == 0:
            continue
        s = 1 if vq / vp > 0 else -1
        tot += s
        if x < 0:
            neg += s
        elif x > 0:
            pos += s
    return IndexOracle(tot, neg, pos)


def pair_sum_product(roots: Sequence) -> Fraction:
    out = Fraction(1)
    for a, b in combinations(roots, 2):
        out *= a + b
    return out


def resultant_product_formula(p_lead: Fraction, p_roots: Sequence, q: Polynomial) -> Fraction:
    """a_0^m prod q(lambda_i) over the zeros of p (listed with multiplicity)."""
    out = Fraction(p_lead) ** q.degree
    for z in p_roots:
        out *= evaluate(q, z)
    return out


def moment_sequence(nodes: Sequence, weights: Sequence, count: int) -> tuple:
    """s_i = sum_j w_j x_j^i for i = 0..count-1."""
    return tuple(sum(Fraction(w) * Fraction(x) ** i for x, w in zip(nodes, weights)) for i in range(count))


def node_polynomial(nodes: Sequence) -> Polynomial:
    return from_root_spec(RootSpec(tuple((Fraction(x), 1) for x in nodes), (), Fraction(1)))


# ---- fixture corpus ----

def parse_corpus(text: str) -> list:
    """One RootSpec per line; blank lines and '#' comments are skipped."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_root_spec(line))
    return out


def load_corpus(path) -> list:
    return parse_corpus(Path(path).read_text())
