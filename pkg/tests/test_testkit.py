import random
from fractions import Fraction as F

import pytest

from rootloc.errors import ParseError, PreconditionError, ZeroDenominator
from rootloc.hurwitz import BandMatrixView, d_infinity, toeplitz_matrix, MinorViolation
from rootloc.matrix import det
from rootloc.poly_core import Polynomial, RootSpec, from_root_spec, poly
from rootloc.testkit import (
    MinorEnumConfig, cauchy_index_oracle, enumerate_minors, identity_view, interlacing_pair, load_corpus,
    moment_sequence, node_polynomial, parse_corpus, random_root_spec, root_count_oracle,
    series_by_long_division,
)


def test_enumerate_examples():
    assert enumerate_minors(toeplitz_matrix(poly(1, 2, 1), 6), MinorEnumConfig(2, 6)) is None
    assert enumerate_minors(d_infinity([1, 0, 1], 8), MinorEnumConfig(3, 8)) == MinorViolation((2, 3), (2, 3), F(-2))
    assert enumerate_minors(identity_view(8), MinorEnumConfig(4, 8)) is None


def test_enumerate_window_precondition():
    with pytest.raises(PreconditionError):
        enumerate_minors(identity_view(5), MinorEnumConfig(2, 6))


def test_enumerate_finds_genuine_witness():
    # brute force over all 2x2 minors of a small matrix with one planted negative minor
    M = [[1, 2, 0], [3, 1, 0], [0, 0, 1]]
    view = BandMatrixView("planted", (), lambda i, c: F(M[i][c]), 3)
    w = enumerate_minors(view, MinorEnumConfig(2, 3))
    assert w is not None and w.value < 0
    rows = [i - 1 for i in w.rows]
    cols = [j - 1 for j in w.cols]
    assert det([[M[i][j] for j in cols] for i in rows]) == w.value


def test_long_division_examples():
    assert series_by_long_division(poly(1, -3, 1), poly(1, -2), 4) == (0, 1, 1, 2, 5)
    assert series_by_long_division(poly(1, -4, 2), poly(1, -3), 4) == (0, 1, 1, 2, 6)
    assert series_by_long_division(poly(1, 2), Polynomial.zero(), 3) == (0, 0, 0, 0)
    with pytest.raises(ZeroDenominator):
        series_by_long_division(Polynomial.zero(), poly(1), 3)


def test_root_spec_generator_respects_options():
    rng = random.Random(1)
    for _ in range(50):
        s = random_root_spec(rng, 6, 2, signs="negative", allow_quadratic=False, simple=True)
        assert 1 <= s.degree <= 6 and not s.quadratic_factors
        assert all(r < 0 and m == 1 for r, m in s.rational_roots)


def test_root_count_oracle_by_hand():
    spec = RootSpec(((F(0), 2), (F(3), 1), (F(-1), 3)), ((F(0), F(1), 1),))
    o = root_count_oracle(spec)
    assert (o.m_distinct, o.k_nonreal_pairs, o.r_distinct_real, o.r_plus, o.r_minus, o.zero_is_root,
            o.positive_with_multiplicity) == (5, 1, 3, 1, 1, True, 1)


def test_cauchy_index_oracle_by_hand():
    # 1/z: jump from -inf to +inf at 0
    o = cauchy_index_oracle(poly(1, 0), poly(1), [F(0)])
    assert (o.real_line, o.negative, o.positive) == (1, 0, 0)
    # 1/z^2 has an even pole: no jump
    assert cauchy_index_oracle(poly(1, 0, 0), poly(1), [F(0)]).real_line == 0


def test_interlacing_pair_structure():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 6)
        p, q, pr, qr = interlacing_pair(rng, n)
        merged = sorted([(x, "p") for x in pr] + [(x, "q") for x in qr])
        assert [t for _, t in merged] == ["p", "q"] * (n - 1) + ["p"]
        assert p.degree == n and q.degree == n - 1 and q.lead > 0


def test_moment_helpers():
    s = moment_sequence([F(1), F(-2)], [F(3), F(1)], 4)
    assert s == (4, 1, 7, -5)
    assert node_polynomial([F(1), F(-2)]) == poly(1, 1, -2)


def test_corpus_parsing(tmp_path):
    text = "# comment\n1; 1^2, -1/2; (0,1)\n\n-2; ; (2,5)^2\n"
    specs = parse_corpus(text)
    assert len(specs) == 2
    assert from_root_spec(specs[0]) == poly(1, -1) ** 2 * poly(1, F(1, 2)) * poly(1, 0, 1)
    assert from_root_spec(specs[1]) == poly(1, 2, 5) ** 2 * poly(-2)
    path = tmp_path / "c.txt"
    path.write_text(text)
    assert load_corpus(path) == specs
    with pytest.raises(ParseError):
        parse_corpus("1; 2")
