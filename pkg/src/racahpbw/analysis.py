"""Filtration degree, leading terms, and bounded-degree checks of the center.

The filtration weight of a normal word A^i D^j B^k alpha^r delta^s beta^t is
i + 2j + k + r + s + t. The zero polynomial has degree ``-inf`` so that
"x lies in R_n" is always ``degree(x) <= n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Tuple

from .errors import BoundTooLarge, ZeroPolynomial
from .freealg import NcPoly, Word, commutator, exponents_to_word, word_to_exponents
from .linalg import rank, nullspace
from .racah import named
from .rewrite import is_normal, reduce, rmul, rpow

ZERO_DEGREE = float("-inf")

DEFAULT_CENTER_MAX = 6
DEFAULT_INDEPENDENCE_MAX = 8
DEFAULT_PBW_MAX = 5

_D = 1
_A = NcPoly.letter(0)
_B = NcPoly.letter(2)
_DL = NcPoly.letter(1)


def word_weight(word: Word) -> int:
    return len(word) + word.count(_D)


def degree(p: NcPoly):
    if not is_normal(p):
        p = reduce(p)
    return max((word_weight(w) for w in p.words()), default=ZERO_DEGREE)


def exponent_tuples(n: int) -> List[Tuple[int, ...]]:
    """All (i, j, k, r, s, t) with i + 2j + k + r + s + t <= n, lowest weight first."""
    out = []
    for i, j, k, r, s in product(range(n + 1), range(n // 2 + 1), range(n + 1), range(n + 1), range(n + 1)):
        w = i + 2 * j + k + r + s
        if w > n:
            continue
        for t in range(n - w + 1):
            out.append((i, j, k, r, s, t))
    out.sort(key=lambda e: (e[0] + 2 * e[1] + sum(e[2:]), tuple(-x for x in e)))
    return out


def normal_words(n: int) -> List[Word]:
    return [exponents_to_word(e) for e in exponent_tuples(n)]


def monomial_count(n: int) -> int:
    """Dimension of R_n."""
    return len(exponent_tuples(n))


@dataclass(frozen=True)
class LeadingTerm:
    tuple: Tuple[int, ...]
    coefficient: object


def leading_term(p: NcPoly) -> LeadingTerm:
    if not is_normal(p):
        p = reduce(p)
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading term")
    top = degree(p)
    word = max((w for w in p.words() if word_weight(w) == top), key=word_to_exponents)
    return LeadingTerm(word_to_exponents(word), p.coefficient(word))


def random_polynomial(rng: random.Random, max_degree: int, max_terms: int = 4) -> NcPoly:
    """A nonzero reduced polynomial of degree <= max_degree with small rational coefficients."""
    words = normal_words(max_degree)
    terms = {}
    while not terms:
        for _ in range(rng.randint(1, max_terms)):
            c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
            terms[rng.choice(words)] = c
    return NcPoly(terms)


def leading_multiplicativity_check(samples: int, max_degree: int, rng_seed: int) -> bool:
    """Sampled check that leading tuples add under multiplication (so uv != 0)."""
    rng = random.Random(rng_seed)
    ok = True
    for _ in range(samples):
        u = random_polynomial(rng, max_degree)
        v = random_polynomial(rng, max_degree)
        uv = rmul(u, v)
        if uv.is_zero():
            return False
        lu, lv, luv = leading_term(u), leading_term(v), leading_term(uv)
        ok &= luv.tuple == tuple(a + b for a, b in zip(lu.tuple, lv.tuple))
    return ok


def _adb(i: int, j: int, k: int) -> NcPoly:
    return NcPoly.monomial(exponents_to_word((i, j, k, 0, 0, 0)))


def commutator_degree_checks(max_i: int, max_j: int, max_k: int) -> bool:
    """[A, A^i D^j B^k] and [B, A^i D^j B^k] agree with their D-shifted leading parts mod R_{i+2j+k}."""
    for i in range(max_i + 1):
        for j in range(max_j + 1):
            for k in range(max_k + 1):
                n = i + 2 * j + k
                x = _adb(i, j, k)
                ca = reduce(commutator(_A, x))
                if k:
                    ca = ca - 2 * k * _adb(i, j + 1, k - 1)
                cb = reduce(commutator(_B, x))
                if i:
                    cb = cb + 2 * i * _adb(i - 1, j + 1, k)
                if degree(ca) > n or degree(cb) > n:
                    return False
    return True


@lru_cache(maxsize=None)
def omega_power(n: int) -> NcPoly:
    """Reduced Omega_A ** n."""
    if n == 0:
        return NcPoly.one()
    return rmul(omega_power(n - 1), named("Omega_A"))


def omega_power_congruence(max_n: int) -> bool:
    """Omega^n - D^(2n) lies in R_{4n-1} for 1 <= n <= max_n."""
    return all(degree(omega_power(n) - rpow(_DL, 2 * n)) <= 4 * n - 1 for n in range(1, max_n + 1))


def central_tuples(bound: int) -> List[Tuple[int, int, int, int]]:
    """(l, r, s, t) with 4l + r + s + t <= bound."""
    return [
        (l, r, s, t)
        for l in range(bound // 4 + 1)
        for r in range(bound + 1)
        for s in range(bound + 1)
        for t in range(bound + 1)
        if 4 * l + r + s + t <= bound
    ]


def omega_monomial(l: int, r: int, s: int, t: int) -> NcPoly:
    return rmul(omega_power(l), NcPoly.monomial(exponents_to_word((0, 0, 0, r, s, t))))


@dataclass
class CenterReport:
    bound: int
    kernel_dimension: int
    expected_dimension: int
    basis: List[NcPoly] = field(repr=False)
    expected_in_kernel: bool = True

    @property
    def matches(self) -> bool:
        return self.kernel_dimension == self.expected_dimension and self.expected_in_kernel


def _commutes_with_generators(p: NcPoly) -> bool:
    return reduce(commutator(_A, p)).is_zero() and reduce(commutator(_B, p)).is_zero()


def center_basis(bound: int, max_bound: int = DEFAULT_CENTER_MAX) -> CenterReport:
    """Exact kernel of x -> ([A, x], [B, x]) on R_bound.

    A and B generate the algebra (C = delta - A - B, D = [A, B]/2), so the
    kernel is the center intersected with R_bound.
    """
    if bound > max_bound:
        raise BoundTooLarge(f"center bound {bound} exceeds maximum {max_bound}")
    words = normal_words(bound)
    columns = []
    for w in words:
        x = NcPoly.monomial(w)
        col = {}
        for tag, g in (("A", _A), ("B", _B)):
            for u, c in (rmul(g, x) - rmul(x, g)).items():
                col[(tag, u)] = c
        columns.append(col)
    kernel = [NcPoly({words[j]: c for j, c in vec.items()}) for vec in nullspace(columns)]
    expected = central_tuples(bound)
    in_kernel = all(_commutes_with_generators(omega_monomial(*e)) for e in expected)
    return CenterReport(bound, len(kernel), len(expected), kernel, in_kernel)


def _rank_of(polys: List[NcPoly]) -> int:
    return rank([dict(p.items()) for p in polys])


def algebraic_independence_check(weight_bound: int, max_bound: int = DEFAULT_INDEPENDENCE_MAX) -> bool:
    """The reduced Omega^l alpha^r delta^s beta^t with 4l + r + s + t <= bound are independent."""
    if weight_bound > max_bound:
        raise BoundTooLarge(f"independence bound {weight_bound} exceeds maximum {max_bound}")
    polys = [omega_monomial(*e) for e in central_tuples(weight_bound)]
    return _rank_of(polys) == len(polys)


def pbw_omega_tuples(bound: int) -> List[Tuple[int, ...]]:
    """(i, j, k, l, r, s, t) with j in {0, 1} and i + 2j + k + 4l + r + s + t <= bound."""
    out = []
    for i, j, k, r, s, t in exponent_tuples(bound):
        if j > 1:
            continue
        rest = bound - (i + 2 * j + k + r + s + t)
        for l in range(rest // 4 + 1):
            out.append((i, j, k, l, r, s, t))
    return out


def pbw_omega_basis_check(bound: int, max_bound: int = DEFAULT_PBW_MAX) -> bool:
    """The Omega-adapted monomials of weight <= bound form a basis of R_bound."""
    if bound > max_bound:
        raise BoundTooLarge(f"PBW bound {bound} exceeds maximum {max_bound}")
    polys = []
    for i, j, k, l, r, s, t in pbw_omega_tuples(bound):
        left = NcPoly.monomial(exponents_to_word((i, j, k, 0, 0, 0)))
        polys.append(rmul(left, omega_monomial(l, r, s, t)))
    if len(polys) != monomial_count(bound):
        return False
    if any(degree(p) > bound for p in polys):
        return False
    return _rank_of(polys) == len(polys)
