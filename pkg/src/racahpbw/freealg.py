"""Exact arithmetic in the free associative algebra on six letters.

Words are tuples of letter ranks (``Letter`` is an ``IntEnum`` so either
spelling works as a key). Coefficients are exact rationals: Python ``int``
when integral, ``fractions.Fraction`` otherwise, always in lowest terms.
No relations are applied at this layer; ``B * A`` stays ``BA``.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Word = Tuple[int, ...]
Scalar = Union[int, Fraction]


class Letter(IntEnum):
    A = 0
    D = 1
    B = 2
    ALPHA = 3
    DELTA = 4
    BETA = 5

    @property
    def rank(self) -> int:
        return int(self)

    @property
    def symbol(self) -> str:
        return LETTER_SYMBOLS[self]


LETTER_SYMBOLS = ("A", "D", "B", "alpha", "delta", "beta")
NUM_LETTERS = len(LETTER_SYMBOLS)
EMPTY_WORD: Word = ()


def scalar(value) -> Scalar:
    """Coerce ``value`` to a canonical exact scalar (int if integral)."""
    if isinstance(value, bool) or not isinstance(value, (Rational, str)):
        raise TypeError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def is_normal_word(word: Word) -> bool:
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def word_sort_key(word: Word):
    """Canonical total order on words: length first, then rank-lexicographic."""
    return (len(word), word)


def word_to_exponents(word: Word) -> Tuple[int, ...]:
    """Exponent tuple (i, j, k, r, s, t) of a normal word A^i D^j B^k α^r δ^s β^t."""
    if not is_normal_word(word):
        raise ValueError(f"word is not normal: {format_word(word)}")
    exps = [0] * NUM_LETTERS
    for x in word:
        exps[x] += 1
    return tuple(exps)


def exponents_to_word(exps: Iterable[int]) -> Word:
    exps = tuple(exps)
    if len(exps) != NUM_LETTERS or any(e < 0 for e in exps):
        raise ValueError(f"bad exponent tuple: {exps}")
    word = []
    for rank, e in enumerate(exps):
        word.extend([rank] * e)
    return tuple(word)


def format_word(word: Word) -> str:
    """Space-separated letters with runs collapsed, e.g. ``A^2 B``; empty word is ``1``."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        sym = LETTER_SYMBOLS[word[i]]
        parts.append(sym if j - i == 1 else f"{sym}^{j - i}")
        i = j
    return " ".join(parts)


class NcPoly:
    """An element of the free algebra: a finite map from words to nonzero scalars.

    Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        clean: Dict[Word, Scalar] = {}
        if terms:
            for word, coef in terms.items():
                word = tuple(int(x) for x in word)
                if any(not 0 <= x < NUM_LETTERS for x in word):
                    raise ValueError(f"bad letter in word {word}")
                c = clean.get(word, 0) + scalar(coef)
                if c:
                    clean[word] = c
                else:
                    clean.pop(word, None)
        self._terms = {w: scalar(c) for w, c in clean.items()}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Word, Scalar]) -> "NcPoly":
        # Trusted constructor: ``terms`` already canonical and owned by the result.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "NcPoly":
        return cls._wrap({EMPTY_WORD: 1})

    @classmethod
    def const(cls, c) -> "NcPoly":
        c = scalar(c)
        return cls._wrap({EMPTY_WORD: c} if c else {})

    @classmethod
    def monomial(cls, word: Iterable[int], coef=1) -> "NcPoly":
        return cls({tuple(word): coef})

    @classmethod
    def letter(cls, x: int) -> "NcPoly":
        return cls._wrap({(int(x),): 1})

    # mapping-ish access

    @property
    def terms(self) -> Mapping[Word, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word: Iterable[int]) -> Scalar:
        return self._terms.get(tuple(word), 0)

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda wc: word_sort_key(wc[0]))

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "NcPoly":
        if isinstance(other, NcPoly):
            return other
        return NcPoly.const(other)

    def scale(self, c) -> "NcPoly":
        c = scalar(c)
        if not c:
            return NcPoly.zero()
        return NcPoly._wrap({w: scalar(v * c) for w, v in self._terms.items()})

    def __neg__(self) -> "NcPoly":
        return NcPoly._wrap({w: -v for w, v in self._terms.items()})

    def __add__(self, other) -> "NcPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return linear_combine(1, self, 1, other)

    __radd__ = __add__

    def __sub__(self, other) -> "NcPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return linear_combine(1, self, -1, other)

    def __rsub__(self, other) -> "NcPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return linear_combine(1, other, -1, self)

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other) -> "NcPoly":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other) -> "NcPoly":
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        if not c:
            raise ZeroDivisionError("division of polynomial by zero")
        return self.scale(Fraction(1) / c)

    def __pow__(self, n: int) -> "NcPoly":
        return pow_(self, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        try:
            return self._terms == NcPoly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "NcPoly(0)"
        body = " + ".join(f"{c}*{format_word(w)}" for w, c in self.sorted_terms())
        return f"NcPoly({body})"


def linear_combine(c1, p1: NcPoly, c2, p2: NcPoly) -> NcPoly:
    """``c1*p1 + c2*p2`` with zero coefficients pruned."""
    c1, c2 = scalar(c1), scalar(c2)
    out: Dict[Word, Scalar] = {}
    if c1:
        for w, v in p1.items():
            out[w] = v * c1
    if c2:
        for w, v in p2.items():
            c = out.get(w, 0) + v * c2
            if c:
                out[w] = c
            else:
                del out[w]
    return NcPoly._wrap({w: scalar(v) for w, v in out.items()})


def mul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Free-algebra product: bilinear extension of word concatenation."""
    out: Dict[Word, Scalar] = {}
    for u, a in p.items():
        for v, b in q.items():
            w = u + v
            c = out.get(w, 0) + a * b
            if c:
                out[w] = c
            else:
                del out[w]
    return NcPoly._wrap({w: scalar(v) for w, v in out.items()})


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return mul(p, q) - mul(q, p)


def anticommutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return mul(p, q) + mul(q, p)


def pow_(p: NcPoly, n: int) -> NcPoly:
    if n < 0:
        raise ValueError("negative exponent")
    result = NcPoly.one()
    for _ in range(n):
        result = mul(result, p)
    return result


A, D, B, ALPHA, DELTA, BETA = (NcPoly.letter(x) for x in Letter)
