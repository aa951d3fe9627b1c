"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``key -> int | Fraction``. Elimination runs on integer rows
(denominators cleared, each row kept primitive), so no fractions appear
until the kernel vectors are read off at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Hashable, List, Mapping, Sequence, Tuple

Row = Dict[Hashable, int]


def _primitive(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def integer_row(vec: Mapping[Hashable, object]) -> Row:
    """Scale a rational vector to a primitive integer vector (same line)."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    row = {k: int(v * den) for k, v in vec.items() if v}
    return _primitive(row)


class Echelon:
    """Incremental row echelon form over the integers.

    Each pivot row is reduced against every pivot inserted before it, so a
    single pass over the pivots in insertion order fully reduces a new row.
    """

    def __init__(self, order=None):
        self._order = order
        self.pivots: List[Tuple[Hashable, Row]] = []
        self._cols: set = set()

    def _reduce(self, row: Row) -> Row:
        for c, prow in self.pivots:
            b = row.get(c)
            if not b:
                continue
            a = prow[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in prow.items():
                x = new.get(k, 0) - b * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row

    def add(self, vec: Mapping[Hashable, object]) -> bool:
        """Insert a vector; return True iff it increased the rank."""
        row = self._reduce(integer_row(vec))
        if not row:
            return False
        c = min(row, key=self._order) if self._order else min(row)
        self.pivots.append((c, row))
        self._cols.add(c)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduced(self) -> Dict[Hashable, Row]:
        """Gauss-Jordan form: pivot column -> row with zeros in all other pivot columns."""
        rows = {c: dict(r) for c, r in self.pivots}
        for c, _ in reversed(self.pivots):
            prow = rows[c]
            for c2, row in rows.items():
                if c2 == c or not row.get(c):
                    continue
                a, b = prow[c], row[c]
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {k: a * v for k, v in row.items()}
                for k, v in prow.items():
                    x = new.get(k, 0) - b * v
                    if x:
                        new[k] = x
                    else:
                        new.pop(k, None)
                rows[c2] = _primitive(new)
        return rows


def rank(vectors: Sequence[Mapping[Hashable, object]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(columns: Sequence[Mapping[Hashable, object]]) -> List[Dict[int, Fraction]]:
    """Kernel of the matrix whose j-th column is ``columns[j]``.

    Returns a basis of vectors ``{j: coefficient}``, one per free column.
    """
    ncols = len(columns)
    rows: Dict[Hashable, Dict[int, object]] = {}
    for j, col in enumerate(columns):
        for key, v in col.items():
            if v:
                rows.setdefault(key, {})[j] = v
    ech = Echelon()
    for key in sorted(rows, key=repr):
        ech.add(rows[key])
    rref = ech.reduced()
    free = [j for j in range(ncols) if j not in rref]
    basis = []
    for f in free:
        vec: Dict[int, Fraction] = {f: Fraction(1)}
        for p, row in rref.items():
            v = row.get(f)
            if v:
                vec[p] = Fraction(-v, row[p])
        basis.append(vec)
    return basis


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for k in range(c + 1, ncols):
                m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r
