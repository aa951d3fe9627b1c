from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from racahpbw.linalg import Echelon, bareiss_rank, integer_row, nullspace, rank

small = st.integers(-4, 4)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def as_rows(m):
    return [{j: v for j, v in enumerate(row) if v} for row in m]


def test_integer_row_is_primitive():
    assert integer_row({0: Fraction(1, 2), 1: Fraction(1, 3)}) == {0: 3, 1: 2}
    assert integer_row({0: 4, 1: 6, 2: 0}) == {0: 2, 1: 3}
    assert integer_row({}) == {}


def test_rank_examples():
    assert rank([]) == 0
    assert rank([{}, {}]) == 0
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert rank([{0: Fraction(1, 2)}, {1: 3}, {0: 1, 1: 1}]) == 2


def test_echelon_reports_growth():
    e = Echelon()
    assert e.add({"x": 1})
    assert not e.add({"x": 5})
    assert e.add({"x": 1, "y": 1})
    assert e.rank == 2


@settings(max_examples=150)
@given(matrices())
def test_rank_matches_sympy_and_bareiss(m):
    expected = sympy.Matrix(m).rank()
    assert rank(as_rows(m)) == expected
    assert bareiss_rank(m) == expected


@settings(max_examples=150)
@given(matrices())
def test_nullspace_matches_sympy(m):
    # columns[j] is column j of m, keyed by row index
    ncols = len(m[0])
    columns = [{i: m[i][j] for i in range(len(m)) if m[i][j]} for j in range(ncols)]
    basis = nullspace(columns)
    assert len(basis) == len(sympy.Matrix(m).nullspace())
    for vec in basis:
        for row in m:
            assert sum(row[j] * c for j, c in vec.items()) == 0
    dense = [[vec.get(j, 0) for j in range(ncols)] for vec in basis]
    if dense:
        assert sympy.Matrix(dense).rank() == len(basis)


def test_nullspace_rational_entries():
    cols = [{0: Fraction(1, 2)}, {0: Fraction(1, 3)}]
    (vec,) = nullspace(cols)
    assert Fraction(1, 2) * vec.get(0, 0) + Fraction(1, 3) * vec.get(1, 0) == 0
