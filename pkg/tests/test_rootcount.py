import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rootloc.contfrac import NotStieltjes, StieltjesFraction
from rootloc.errors import NotRealRooted, PreconditionError
from rootloc.hurwitz import d_infinity, MinorViolation
from rootloc.poly_core import Polynomial, RootSpec, derivative, from_root_spec, poly, reflect
from rootloc.rootcount import (
    all_zeros_negative, all_zeros_negative_ascending, coefficient_subsequence, count_roots, delta_ledger,
    log_derivative_stieltjes, newton_sums, only_nonpositive_zeros, positive_root_count_descartes,
    real_rooted,
)
from rootloc.series_hankel import minor_ledger
from rootloc.testkit import MinorEnumConfig, enumerate_minors, random_poly, random_root_spec, root_count_oracle


def test_newton_sums_examples():
    assert newton_sums(poly(1, 3, 2), 5).s[1:] == (2, -3, 5, -9, 17)
    assert newton_sums(poly(1, 0, 0, 0), 4).s[1:] == (3, 0, 0, 0)
    assert newton_sums(poly(1, -3, 2), 4).s[1:] == (2, 3, 5, 9)


def test_newton_sums_are_power_sums():
    rng = random.Random(1)
    for _ in range(30):
        roots = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 6))]
        p = from_root_spec(RootSpec(tuple((z, 1) for z in roots), (), F(rng.choice([1, -2]))))
        s = newton_sums(p, 9)
        assert all(s.at(k) == sum(z ** k for z in roots) for k in range(9))


def test_count_roots_examples():
    rep = count_roots(poly(1, 0, -2, 1))
    assert (rep.m_distinct, rep.k_nonreal_pairs, rep.r_distinct_real, rep.r_plus, rep.r_minus) == (3, 0, 3, 2, 1)
    rep = count_roots(poly(1, 3, 2))
    assert (rep.m_distinct, rep.k_nonreal_pairs, rep.r_minus, rep.r_plus) == (2, 0, 2, 0)
    rep = count_roots(poly(1, 0, 1, 0))
    assert (rep.m_distinct, rep.k_nonreal_pairs, rep.r_distinct_real) == (3, 1, 1)
    assert rep.zero_is_root and rep.r_plus == rep.r_minus == 0
    with pytest.raises(PreconditionError):
        count_roots(poly(5))


def test_count_roots_against_construction():
    rng = random.Random(2)
    for _ in range(120):
        spec = random_root_spec(rng, 8, 3)
        rep = count_roots(from_root_spec(spec))
        want = root_count_oracle(spec)
        assert (rep.m_distinct, rep.k_nonreal_pairs, rep.r_distinct_real, rep.r_plus, rep.r_minus,
                rep.zero_is_root, rep.positive_with_multiplicity) == \
            (want.m_distinct, want.k_nonreal_pairs, want.r_distinct_real, want.r_plus, want.r_minus,
             want.zero_is_root, want.positive_with_multiplicity)


def test_cubic_delta_family():
    for a in range(-3, 4):
        for b in range(-3, 4):
            d5 = -4 * a ** 3 - 27 * b ** 2
            assert delta_ledger(poly(1, 0, a, b)).delta == (3, 0, -6 * a, -4 * a * a, d5, b * d5)


def test_delta_examples():
    assert delta_ledger(poly(1, 0, -2, 1)).delta == (3, 0, 12, -16, 5, 5)
    dl = delta_ledger(poly(1, 3, 2))
    assert dl.at(0) == 1 and dl.at(2) == 3 and dl.at(4) == 2
    rng = random.Random(3)
    for _ in range(20):
        p = random_poly(rng, rng.randint(1, 6))
        assert delta_ledger(p).at(1) == p.lead * p.degree


def test_delta_hankel_bridge():
    rng = random.Random(4)
    for _ in range(40):
        p = random_poly(rng, rng.randint(1, 6))
        a0, n = p.lead, p.degree
        dl = delta_ledger(p)
        led = minor_ledger(p, derivative(p), n)
        for j in range(1, n + 1):
            assert dl.at(2 * j - 1) == a0 ** (2 * j - 1) * led.d(j)
            assert dl.at(2 * j) == (-1) ** j * a0 ** (2 * j) * led.dhat(j)


def test_real_rooted_examples():
    assert real_rooted(poly(1, 0, -2, 1)).verdict
    assert not real_rooted(poly(1, 0, 1)).verdict
    v = real_rooted(poly(1, -1) ** 3)
    assert v.verdict and v.m == 1


def test_real_rooted_against_construction():
    rng = random.Random(5)
    for _ in range(60):
        spec = random_root_spec(rng, 7, 3)
        assert real_rooted(from_root_spec(spec)).verdict == (not spec.quadratic_factors)


def test_all_zeros_negative_examples():
    assert all_zeros_negative(poly(1, 3, 2)).verdict
    assert all_zeros_negative_ascending([1, 2, 1]).verdict
    assert enumerate_minors(d_infinity([1, 2, 1], 8), MinorEnumConfig(3, 8)) is None
    v = all_zeros_negative(poly(1, 0, 1))
    assert not v.verdict and v.witness == MinorViolation((2, 3), (2, 3), F(-2))


def test_all_zeros_negative_against_construction():
    rng = random.Random(6)
    for _ in range(60):
        spec = random_root_spec(rng, 6, 2, signs=rng.choice(["negative", "mixed"]))
        want = not spec.quadratic_factors and all(r < 0 for r, _ in spec.rational_roots)
        assert all_zeros_negative(from_root_spec(spec)).verdict == want
        assert only_nonpositive_zeros(from_root_spec(spec)) == \
            (not spec.quadratic_factors and all(r <= 0 for r, _ in spec.rational_roots))


def test_descartes_examples():
    assert positive_root_count_descartes(poly(1, -3, 2)) == 2
    assert positive_root_count_descartes(poly(1, 2, 1)) == 0
    assert positive_root_count_descartes(poly(1, -2, 1, 0)) == 2
    with pytest.raises(NotRealRooted):
        positive_root_count_descartes(poly(1, 0, 1))


def test_descartes_exact_for_real_rooted():
    rng = random.Random(7)
    for _ in range(50):
        spec = random_root_spec(rng, 7, 3, allow_quadratic=False)
        p = from_root_spec(spec)
        assert positive_root_count_descartes(p) == root_count_oracle(spec).positive_with_multiplicity


def test_log_derivative_stieltjes_examples():
    fr = log_derivative_stieltjes(poly(1, 3, 2))
    assert fr.c == (F(1, 2), F(4, 3), F(9, 2), F(1, 6)) and all(c > 0 for c in fr.c)
    fr = log_derivative_stieltjes(poly(1, -3, 2))
    assert all(c > 0 for c in fr.c[0::2]) and all(c < 0 for c in fr.c[1::2])
    fr = log_derivative_stieltjes(poly(1, 1, 0))
    assert fr.k == 3 and fr.terminal == "pole_at_zero"


def test_log_derivative_stieltjes_random():
    rng = random.Random(8)
    seen = 0
    for _ in range(40):
        spec = random_root_spec(rng, 6, 2)
        fr = log_derivative_stieltjes(from_root_spec(spec))
        if isinstance(fr, StieltjesFraction):
            seen += 1
            if not spec.quadratic_factors:
                assert all(c > 0 for c in fr.c[0::2])
        else:
            assert isinstance(fr, NotStieltjes)
    assert seen > 10


def test_negative_simple_roots_both_menus():
    rng = random.Random(9)
    for _ in range(30):
        spec = random_root_spec(rng, 6, 1, signs="negative", allow_quadratic=False, simple=True)
        p = from_root_spec(spec)
        p = -p if p.lead < 0 else p
        n = p.degree
        dl = delta_ledger(p)
        assert all(dl.at(j) > 0 for j in range(1, 2 * n + 1))
        assert all(c > 0 for c in p.coeffs) and all(dl.at(2 * j) > 0 for j in range(1, n + 1))


def _valid_rl(rng, n):
    while True:
        r = rng.randint(1, n)
        l = n // r
        if l >= 1 and r * l <= n < (l + 1) * r:
            return r, l


def test_coefficient_subsequence_preserves_negativity():
    rng = random.Random(10)
    for _ in range(40):
        spec = random_root_spec(rng, 7, 2, signs="negative", allow_quadratic=False)
        g = from_root_spec(spec)
        r, l = _valid_rl(rng, g.degree)
        assert all_zeros_negative(coefficient_subsequence(g, r, l)).verdict


def test_coefficient_subsequence_positive_roots():
    rng = random.Random(11)
    for _ in range(40):
        spec = random_root_spec(rng, 7, 2, signs="positive", allow_quadratic=False)
        g = from_root_spec(spec)
        r, l = _valid_rl(rng, g.degree)
        h = coefficient_subsequence(g, r, l)
        assert all_zeros_negative(h if r % 2 == 0 else reflect(h)).verdict


def test_coefficient_subsequence_precondition():
    with pytest.raises(PreconditionError):
        coefficient_subsequence(poly(1, 2, 3, 4), 2, 2)
    assert coefficient_subsequence(poly(1, 2, 3, 4), 2, 1) == poly(3, 1)


def test_log_concavity_and_newton():
    rng = random.Random(12)
    for _ in range(50):
        spec = random_root_spec(rng, 8, 3, signs="negative", allow_quadratic=False)
        a = from_root_spec(spec).coeffs
        if a[0] < 0:
            a = tuple(-x for x in a)
        n = len(a) - 1
        for j in range(1, n):
            assert a[j] ** 2 - a[j - 1] * a[j + 1] >= 0
            assert a[j] ** 2 - F(j + 1, j) * a[j - 1] * a[j + 1] >= 0


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(-5, 5).filter(lambda x: x != 0),
       st.integers(-5, 5).filter(lambda x: x != 0), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_missing_second_and_third_coefficients(n, a0, a3, tail):
    coeffs = [a0, 0, 0, a3] + tail[: n - 3]
    p = Polynomial(tuple(F(c) for c in coeffs))
    assert not real_rooted(p).verdict
    m = p.degree
    assert delta_ledger(p).at(5) == -9 * m * F(a0) ** 3 * F(a3) ** 2
