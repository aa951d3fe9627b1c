from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from racahpbw.freealg import (
    A,
    B,
    D,
    Letter,
    NcPoly,
    anticommutator,
    commutator,
    exponents_to_word,
    format_word,
    is_normal_word,
    linear_combine,
    mul,
    pow_,
    scalar,
    word_to_exponents,
)

from conftest import polys, poly, rationals


def test_letter_ranks():
    assert [l.rank for l in Letter] == [0, 1, 2, 3, 4, 5]
    assert [l.name for l in Letter] == ["A", "D", "B", "ALPHA", "DELTA", "BETA"]


def test_linear_combine_examples():
    assert linear_combine(1, A, 1, A) == 2 * A
    assert linear_combine(1, mul(A, B), -1, mul(A, B)).is_zero()
    half = linear_combine(Fraction(1, 2), anticommutator(A, B), 0, D)
    assert half == poly({"A B": Fraction(1, 2), "B A": Fraction(1, 2)})


def test_mul_applies_no_relations():
    assert mul(A, B) == poly({"A B": 1})
    assert mul(B, A) == poly({"B A": 1})
    assert mul(A + B, A) == poly({"A A": 1, "B A": 1})


def test_brackets():
    assert commutator(A, A).is_zero()
    assert commutator(A, B) == poly({"A B": 1, "B A": -1})
    assert anticommutator(A, B) == poly({"A B": 1, "B A": 1})


def test_pow():
    assert pow_(D, 0) == NcPoly.one()
    assert pow_(A + B, 2) == poly({"A A": 1, "A B": 1, "B A": 1, "B B": 1})
    assert pow_(D, 2) == poly({"D D": 1})
    with pytest.raises(ValueError):
        pow_(A, -1)


def test_zero_coefficients_are_pruned():
    p = NcPoly({(0,): 1, (2,): 0})
    assert list(p) == [(0,)]
    assert NcPoly({(0,): 0}) == NcPoly.zero()
    assert len(NcPoly.zero()) == 0


def test_scalars_stay_exact():
    assert scalar(Fraction(4, 2)) == 2 and type(scalar(Fraction(4, 2))) is int
    assert scalar("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        NcPoly({(0,): 1.5})


def test_format_word():
    assert format_word(()) == "1"
    assert format_word((0, 0, 2)) == "A^2 B"
    assert format_word((3, 4, 4, 5)) == "alpha delta^2 beta"


@given(polys(), polys(), polys())
def test_mul_associative(p, q, r):
    assert mul(mul(p, q), r) == mul(p, mul(q, r))


@given(polys(), polys(), polys(), rationals, rationals)
def test_mul_bilinear(p, q, r, a, b):
    assert mul(linear_combine(a, p, b, q), r) == linear_combine(a, mul(p, r), b, mul(q, r))
    assert mul(r, linear_combine(a, p, b, q)) == linear_combine(a, mul(r, p), b, mul(r, q))


@given(polys())
def test_identity(p):
    assert mul(NcPoly.one(), p) == p == mul(p, NcPoly.one())


@given(polys(), polys())
def test_bracket_symmetry(p, q):
    assert commutator(p, q) == -commutator(q, p)
    assert anticommutator(p, q) == anticommutator(q, p)


@given(rationals, rationals)
def test_scalar_products_lowest_terms(a, b):
    c = scalar(a * b)
    f = Fraction(c)
    assert f.denominator > 0
    assert f == Fraction(a.numerator * b.numerator, a.denominator * b.denominator)


@given(st.lists(st.integers(0, 5), max_size=8))
def test_normality_matches_sorting(w):
    w = tuple(w)
    assert is_normal_word(w) == (w == tuple(sorted(w)))


def test_exponent_round_trip_all_normal_words():
    count = 0
    for length in range(9):
        for exps in product(range(length + 1), repeat=6):
            if sum(exps) != length:
                continue
            w = exponents_to_word(exps)
            assert is_normal_word(w) and len(w) == length
            assert word_to_exponents(w) == exps
            count += 1
    # multisets of size <= 8 from 6 letters
    assert count == 3003
    with pytest.raises(ValueError):
        word_to_exponents((2, 0))


def test_polys_hashable_and_immutable():
    p = poly({"A": 1})
    terms = p.terms
    terms[(2,)] = 5
    assert p == poly({"A": 1})
    assert hash(p) == hash(poly({"A": 1}))
    assert p == A and p != B and NcPoly.one() == 1
