import random

import pytest
from hypothesis import given, settings

from racahpbw.errors import FuelExhausted
from racahpbw.freealg import NcPoly, mul
from racahpbw.rewrite import (
    ReductionSystem,
    check_confluence,
    default_system,
    is_normal,
    reduce,
    reduce_word,
)

from conftest import poly, polys, word

BDA_GOLDEN = poly({
    "A D B": 1, "D D": -2, "A A B": -3, "A B B": -3, "A D": 6, "D B": 6, "A B delta": 2,
    "D delta": -2, "A A": -2, "B B": -2, "A B": -8, "A beta": 1, "A delta": 2, "B alpha": -1,
    "B delta": 2, "D": 8, "alpha": -2, "beta": 2,
})

# Rule table typed in from the displayed reduction system, independent of the
# engine's own table.
ORACLE_RULES = {
    "B A": {"A B": 1, "D": -2},
    "D A": {"A D": 1, "A delta": 1, "A A": -1, "A B": -2, "D": 2, "alpha": -1},
    "B D": {"D B": 1, "B delta": 1, "B B": -1, "A B": -2, "D": 2, "beta": 1},
    "alpha A": {"A alpha": 1}, "beta A": {"A beta": 1}, "delta A": {"A delta": 1},
    "alpha B": {"B alpha": 1}, "beta B": {"B beta": 1}, "delta B": {"B delta": 1},
    "alpha D": {"D alpha": 1}, "beta D": {"D beta": 1}, "delta D": {"D delta": 1},
    "beta alpha": {"alpha beta": 1}, "delta alpha": {"alpha delta": 1}, "beta delta": {"delta beta": 1},
}


def naive_reduce(p, pick="left"):
    """Unmemoised fixpoint loop: rewrite one non-normal pair per word per pass."""
    rules = {word(k): poly(v) for k, v in ORACLE_RULES.items()}
    while True:
        out = NcPoly.zero()
        changed = False
        for w, c in p.items():
            spots = [i for i in range(len(w) - 1) if (w[i], w[i + 1]) in rules]
            if not spots:
                out = out + NcPoly({w: c})
                continue
            i = spots[0] if pick == "left" else spots[-1]
            mid = rules[(w[i], w[i + 1])]
            out = out + mul(mul(NcPoly.monomial(w[:i], c), mid), NcPoly.monomial(w[i + 2:]))
            changed = True
        p = out
        if not changed:
            return p


def test_rule_table_shape():
    rules = default_system().rules
    assert len(rules) == 15
    assert len({r.lhs for r in rules}) == 15
    for r in rules:
        assert len(r.lhs) == 2 and r.lhs[0] > r.lhs[1]
    oracle = {word(k): poly(v) for k, v in ORACLE_RULES.items()}
    assert {r.lhs: r.rhs for r in rules} == oracle


def test_reduce_examples():
    assert reduce(poly({"B A": 1})) == poly({"A B": 1, "D": -2})
    assert reduce(poly({"D A": 1})) == poly(
        {"A D": 1, "A delta": 1, "A A": -1, "A B": -2, "D": 2, "alpha": -1}
    )
    assert reduce(poly({"A B": 1})) == poly({"A B": 1})


def test_bda_golden_value():
    assert reduce(poly({"B D A": 1})) == BDA_GOLDEN
    assert len(BDA_GOLDEN) == 18


def test_reduce_word_examples():
    assert reduce_word(()) == NcPoly.one()
    assert reduce_word((4, 0)) == poly({"A delta": 1})
    assert reduce_word((1, 1)) == poly({"D D": 1})


def test_is_normal_examples():
    assert is_normal(poly({"A B": 1, "D": -2}))
    assert not is_normal(poly({"B A": 1}))
    assert is_normal(NcPoly.zero())


def test_confluence_reports():
    reports = check_confluence()
    # strictly decreasing triples of six ranks
    assert len(reports) == 20
    assert all(r.resolvable for r in reports)
    by_word = {r.overlap_word: r for r in reports}
    bda = by_word[(2, 1, 0)]
    assert bda.left_path_result == bda.right_path_result == BDA_GOLDEN
    bal = by_word[(5, 3, 0)]
    assert bal.left_path_result == bal.right_path_result == poly({"A alpha beta": 1})


def test_no_inclusion_ambiguities():
    assert default_system().inclusion_ambiguities() == []


def test_fuel_guard():
    tight = ReductionSystem(fuel=3)
    with pytest.raises(FuelExhausted):
        tight.reduce_word((2, 2, 1, 0, 0))


@settings(max_examples=60)
@given(polys(max_len=6))
def test_idempotent(p):
    r = reduce(p)
    assert is_normal(r)
    assert reduce(r) == r


@settings(max_examples=60)
@given(polys(max_len=4), polys(max_len=4))
def test_reduction_respects_products(p, q):
    assert reduce(mul(p, q)) == reduce(mul(reduce(p), reduce(q)))


@settings(max_examples=40)
@given(polys(max_len=5, max_terms=3))
def test_matches_unmemoised_oracle(p):
    assert reduce(p) == naive_reduce(p)


def test_strategy_independence():
    rng = random.Random(7)
    for _ in range(200):
        w = tuple(rng.randrange(6) for _ in range(rng.randint(0, 8)))
        left = reduce_word(w, strategy="leftmost")
        assert left == reduce_word(w, strategy="rightmost")
    for _ in range(10):
        w = tuple(rng.randrange(6) for _ in range(rng.randint(0, 5)))
        p = NcPoly.monomial(w)
        assert naive_reduce(p, "left") == naive_reduce(p, "right") == reduce(p)


def test_normal_words_never_merge():
    # distinct normal words reduce to themselves, so coordinates are well defined
    rng = random.Random(3)
    for _ in range(50):
        terms = {tuple(sorted(rng.randrange(6) for _ in range(rng.randint(0, 6)))): rng.randint(1, 9) for _ in range(5)}
        p = NcPoly(terms)
        assert reduce(p) == p


def test_termination_length_ten():
    sys_ = ReductionSystem(fuel=10**7)
    rng = random.Random(11)
    for _ in range(30):
        w = tuple(rng.randrange(6) for _ in range(10))
        assert is_normal(sys_.reduce_word(w))
    worst = (5, 4, 3, 2, 2, 1, 1, 0, 0, 0)
    assert is_normal(sys_.reduce_word(worst))
