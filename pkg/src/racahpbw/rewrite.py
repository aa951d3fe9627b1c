"""The Racah reduction system, normal forms, and the overlap-ambiguity checker.

Every non-normal adjacent letter pair ``yx`` (rank y > rank x) has exactly one
rule. Three of them carry the algebra:

    BA -> AB - 2D
    DA -> AD + A delta - A^2 - 2AB + 2D - alpha
    BD -> DB + B delta - B^2 - 2AB + 2D + beta

and the other twelve move a central letter (alpha, delta, beta) to the right
past a lower-ranked letter. Normal words are exactly the sorted words
A^i D^j B^k alpha^r delta^s beta^t.

Termination is guarded by a fuel bound on rewrite steps. An observed
decreasing measure (not relied upon) is: word length, then inversion count,
over the terms of maximal length.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Tuple

from .errors import FuelExhausted
from .freealg import NcPoly, Word, is_normal_word, mul, scalar

A, D, B, ALPHA, DELTA, BETA = range(6)
CENTRAL_LETTERS = (ALPHA, DELTA, BETA)

DEFAULT_FUEL = 10**7
STRATEGIES = ("leftmost", "rightmost")

Rhs = Tuple[Tuple[Word, int], ...]


def _build_rules() -> Dict[Word, Rhs]:
    rules: Dict[Word, Rhs] = {
        (B, A): (((A, B), 1), ((D,), -2)),
        (D, A): (
            ((A, D), 1),
            ((A, DELTA), 1),
            ((A, A), -1),
            ((A, B), -2),
            ((D,), 2),
            ((ALPHA,), -1),
        ),
        (B, D): (
            ((D, B), 1),
            ((B, DELTA), 1),
            ((B, B), -1),
            ((A, B), -2),
            ((D,), 2),
            ((BETA,), 1),
        ),
    }
    for y in CENTRAL_LETTERS:
        for x in range(y):
            rules[(y, x)] = (((x, y), 1),)
    return rules


@dataclass(frozen=True)
class ReductionRule:
    lhs: Word
    rhs: NcPoly


@dataclass(frozen=True)
class AmbiguityReport:
    overlap_word: Word
    left_path_result: NcPoly
    right_path_result: NcPoly

    @property
    def resolvable(self) -> bool:
        return self.left_path_result == self.right_path_result


class ReductionSystem:
    """The fixed 15-rule system with a memoised word normal-form table.

    The rule table never changes after construction. The memo is a private
    cache keyed by word (one per strategy); results do not depend on it.
    """

    def __init__(self, fuel: int = DEFAULT_FUEL):
        self.fuel = fuel
        self._rules = _build_rules()
        self._memo: Dict[str, Dict[Word, Dict[Word, int]]] = {s: {} for s in STRATEGIES}

    @property
    def rules(self) -> List[ReductionRule]:
        return [
            ReductionRule(lhs, NcPoly({w: c for w, c in rhs}))
            for lhs, rhs in sorted(self._rules.items())
        ]

    def rule_for(self, lhs: Word) -> NcPoly:
        return NcPoly({w: c for w, c in self._rules[tuple(lhs)]})

    @staticmethod
    def _find(word: Word, strategy: str) -> int:
        n = len(word)
        if strategy == "leftmost":
            for i in range(n - 1):
                if word[i] > word[i + 1]:
                    return i
        else:
            for i in range(n - 2, -1, -1):
                if word[i] > word[i + 1]:
                    return i
        return -1

    def _normal_form(self, word: Word, strategy: str, fuel: int) -> Dict[Word, int]:
        memo = self._memo[strategy]
        hit = memo.get(word)
        if hit is not None:
            return hit
        rules = self._rules
        steps = 0
        stack = [word]
        while stack:
            u = stack[-1]
            if u in memo:
                stack.pop()
                continue
            p = self._find(u, strategy)
            if p < 0:
                memo[u] = {u: 1}
                stack.pop()
                continue
            steps += 1
            if steps > fuel:
                raise FuelExhausted(f"fuel exhausted: more than {fuel} rewrite steps reducing a word of length {len(word)}")
            head, tail = u[:p], u[p + 2:]
            children = [(head + v + tail, c) for v, c in rules[u[p:p + 2]]]
            pending = [w for w, _ in children if w not in memo]
            if pending:
                stack.extend(pending)
                continue
            acc: Dict[Word, int] = {}
            for w, c in children:
                for x, d in memo[w].items():
                    v = acc.get(x, 0) + c * d
                    if v:
                        acc[x] = v
                    else:
                        del acc[x]
            memo[u] = acc
            stack.pop()
        return memo[word]

    def reduce_word(self, word, *, strategy: str = "leftmost") -> NcPoly:
        nf = self._normal_form(tuple(word), strategy, self.fuel)
        return NcPoly._wrap(dict(nf))

    def reduce(self, p: NcPoly, *, strategy: str = "leftmost") -> NcPoly:
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        acc: Dict[Word, object] = {}
        for word, coef in p.items():
            for w, d in self._normal_form(word, strategy, self.fuel).items():
                v = acc.get(w, 0) + coef * d
                if v:
                    acc[w] = v
                else:
                    del acc[w]
        return NcPoly._wrap({w: scalar(v) for w, v in acc.items()})

    def overlap_words(self) -> List[Word]:
        lhs = set(self._rules)
        out = []
        for xy in lhs:
            for yz in lhs:
                if xy[1] == yz[0]:
                    out.append((xy[0], xy[1], yz[1]))
        return sorted(out)

    def check_confluence(self) -> List[AmbiguityReport]:
        reports = []
        for x, y, z in self.overlap_words():
            left = mul(self.rule_for((x, y)), NcPoly.letter(z))
            right = mul(NcPoly.letter(x), self.rule_for((y, z)))
            reports.append(AmbiguityReport((x, y, z), self.reduce(left), self.reduce(right)))
        return reports

    def inclusion_ambiguities(self) -> List[Tuple[Word, Word]]:
        lhs = list(self._rules)
        return [
            (u, v)
            for u, v in permutations(lhs, 2)
            if any(v[i:i + len(u)] == u for i in range(len(v) - len(u) + 1))
        ]


_DEFAULT = ReductionSystem()


def default_system() -> ReductionSystem:
    return _DEFAULT


def set_default_fuel(fuel: int) -> None:
    _DEFAULT.fuel = fuel


def reduce(p: NcPoly, *, strategy: str = "leftmost") -> NcPoly:
    """Normal form of ``p``: its coordinates in the PBW basis."""
    return _DEFAULT.reduce(p, strategy=strategy)


def reduce_word(word, *, strategy: str = "leftmost") -> NcPoly:
    return _DEFAULT.reduce_word(word, strategy=strategy)


def rmul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Product in the Racah algebra: ``reduce(p * q)``."""
    return _DEFAULT.reduce(mul(p, q))


def rpow(p: NcPoly, n: int) -> NcPoly:
    result = NcPoly.one()
    for _ in range(n):
        result = rmul(result, p)
    return result


def is_normal(p: NcPoly) -> bool:
    return all(is_normal_word(w) for w in p.words())


def check_confluence() -> List[AmbiguityReport]:
    return _DEFAULT.check_confluence()
