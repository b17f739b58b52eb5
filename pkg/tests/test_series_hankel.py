import random
from fractions import Fraction as F

import pytest

from rootloc.errors import ConsistencyError, DegreeMismatch, InsufficientPrefix, ZeroDenominator
from rootloc.matrix import det
from rootloc.poly_core import Polynomial, derivative, from_root_spec, gcd, poly, RootSpec, substitute_square
from rootloc.series_hankel import (
    hankel_minor_D, hankel_minor_Dhat, hankel_minors, hankel_rank, laurent_prefix, minor_ledger,
    nabla_minor, pole_at_zero,
)
from rootloc.testkit import random_pair, series_by_long_division


def test_prefix_examples():
    assert laurent_prefix(poly(1, -3, 1), poly(1, -2), 4).s == (0, 1, 1, 2, 5)
    assert laurent_prefix(poly(1, -4, 2), poly(1, -3), 4).s == (0, 1, 1, 2, 6)
    assert laurent_prefix(poly(1, 2, 3), Polynomial.zero(), 5).s == (0,) * 6


def test_prefix_errors():
    with pytest.raises(ZeroDenominator):
        laurent_prefix(Polynomial.zero(), poly(1), 3)
    with pytest.raises(DegreeMismatch):
        laurent_prefix(poly(1, 0), poly(1, 0, 0), 3)


def test_prefix_head_term():
    s = laurent_prefix(poly(2, 1), poly(3, 0), 3)
    assert s.at(-1) == F(3, 2)


def test_recurrence_holds():
    rng = random.Random(11)
    for _ in range(40):
        p, q = random_pair(rng, 6)
        s = laurent_prefix(p, q, 12)
        n = p.degree
        b = q.padded(n)
        for j in range(0, 12):
            lhs = b[j] if j <= n else 0
            rhs = sum(p.coef(i) * s.at(j - 1 - i) for i in range(0, min(j, n) + 1))
            assert lhs == rhs


def test_minor_examples():
    for p, q in [(poly(1, -3, 1), poly(1, -2)), (poly(1, -4, 2), poly(1, -3))]:
        s = laurent_prefix(p, q, 6)
        assert hankel_minor_D(s, 1) == 1 and hankel_minor_D(s, 2) == 1
        assert hankel_minor_D(s, 0) == 1 and hankel_minor_Dhat(s, 0) == 1
    p = poly(1, 3, 2)
    s = laurent_prefix(p, derivative(p), 6)
    assert (hankel_minor_D(s, 1), hankel_minor_D(s, 2)) == (2, 1)
    assert (hankel_minor_Dhat(s, 1), hankel_minor_Dhat(s, 2)) == (-3, 2)
    assert hankel_minor_Dhat(laurent_prefix(poly(1, -3, 1), poly(1, -2), 4), 1) == 1


def test_insufficient_prefix():
    s = laurent_prefix(poly(1, 0, 1), poly(1), 2)
    with pytest.raises(InsufficientPrefix):
        hankel_minor_D(s, 3)
    with pytest.raises(InsufficientPrefix):
        hankel_minor_Dhat(s, 2)


def test_batch_minors_match_single():
    rng = random.Random(3)
    for _ in range(30):
        p, q = random_pair(rng, 6)
        s = laurent_prefix(p, q, 16)
        D, Dh = hankel_minors(s, 7)
        assert D == tuple(hankel_minor_D(s, j) for j in range(1, 8))
        assert Dh == tuple(hankel_minor_Dhat(s, j) for j in range(1, 8))


def test_rank_examples():
    assert hankel_rank(poly(1, -3, 1), poly(1, -2)) == 2
    assert hankel_rank(poly(1, -2, 1), poly(1, -1)) == 1
    assert hankel_rank(poly(1, 2, 3), Polynomial.zero()) == 0


def test_kronecker_on_random_pairs():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 6)
        g = from_root_spec(RootSpec(((rng.randint(-3, 3), 1),))) if rng.random() < 0.4 else poly(1)
        p, q = random_pair(rng, n)
        p, q = p * g, q * g
        r = hankel_rank(p, q)
        assert r == p.degree - gcd(p, q).degree
        led = minor_ledger(p, q)
        assert led.d(r) != 0 and all(x == 0 for x in led.D[r:])


def test_pole_at_zero_examples():
    assert pole_at_zero(poly(1, 1, 0), poly(1)) is True
    assert pole_at_zero(poly(1, 3, 2), poly(1)) is False
    assert pole_at_zero(poly(1, 1, 0), poly(1, 0)) is False


def test_nabla_examples():
    assert nabla_minor(poly(1, -3, 1), poly(1, -2), 1) == 1
    for j in (1, 2, 3):
        assert nabla_minor(poly(1, 2, 3), Polynomial.zero(), j) == 0


def test_nabla_relation_random():
    rng = random.Random(8)
    for _ in range(60):
        p, q = random_pair(rng, 6)
        led = minor_ledger(p, q, 7)
        for j in range(1, 8):
            assert nabla_minor(p, q, j) == p.lead ** (2 * j) * led.d(j)


def test_long_division_agrees():
    rng = random.Random(9)
    for _ in range(100):
        p, q = random_pair(rng, 8)
        assert series_by_long_division(p, q, 10) == laurent_prefix(p, q, 10).s


def test_odd_stieltjes_split():
    # F(z) = z R(z^2): D_2j(F) = D_j D^_j and D_2j-1(F) = D_j D^_{j-1}
    rng = random.Random(12)
    for _ in range(25):
        p, q = random_pair(rng, 4, equal_allowed=False)
        P, Q = substitute_square(p), substitute_square(q) * poly(1, 0)
        led = minor_ledger(p, q, 5)
        ledF = minor_ledger(P, Q, 9)
        for j in range(1, 5):
            assert ledF.d(2 * j) == led.d(j) * led.dhat(j)
            assert ledF.d(2 * j - 1) == led.d(j) * led.dhat(j - 1)


def test_reciprocal_relation():
    # T = -1/R expanded at infinity; D_k(S) = s_{-1}^{2k} D_k(T) when b_0 != 0
    rng = random.Random(14)
    checked = 0
    for _ in range(40):
        p, q = random_pair(rng, 5)
        if q.degree != p.degree:
            continue
        s = laurent_prefix(p, q, 14)
        t = laurent_prefix(q, -p, 14)
        for k in range(1, 6):
            blockS = [[s.at(i + j) for j in range(k)] for i in range(k)]
            blockT = [[t.at(i + j) for j in range(k)] for i in range(k)]
            assert det(blockS) == s.at(-1) ** (2 * k) * det(blockT)
        checked += 1
    assert checked > 5


def test_pole_at_zero_consistency_error_not_raised_on_random():
    rng = random.Random(21)
    for _ in range(40):
        p, q = random_pair(rng, 5)
        try:
            pole_at_zero(p * poly(1, 0), q)
        except ConsistencyError:  # pragma: no cover
            pytest.fail("zero-pole criteria disagree")
