"""Named elements of the Racah algebra, its presentations, Casimirs, and the D6 action.

The primitive letters are A, D, B, alpha, delta, beta. ``C`` and ``gamma``
are abbreviations for ``delta - A - B`` and ``-alpha - beta``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

from .errors import PowerOutOfRange, UnknownName
from .freealg import (
    NcPoly,
    anticommutator as acomm,
    commutator as comm,
    mul,
    pow_,
)
from .rewrite import CENTRAL_LETTERS, reduce, rmul

A, D, B, ALPHA, DELTA, BETA = (NcPoly.letter(x) for x in range(6))
C = DELTA - A - B
GAMMA = -ALPHA - BETA

NAMES = (
    "A", "B", "C", "D",
    "alpha", "beta", "gamma", "delta",
    "Omega_A", "Omega_B", "Omega_C", "CasRep",
)


def _omega(x: NcPoly, y: NcPoly, z: NcPoly, cy: NcPoly, cz: NcPoly) -> NcPoly:
    # D^2 + (y x z + z x y)/2 + x^2 + y*cz - z*cy - x*delta, with (cy, cz) the
    # central partners of (y, z); e.g. Omega_A uses y=B, z=C, cz=gamma, cy=beta.
    return (
        pow_(D, 2)
        + (mul(mul(y, x), z) + mul(mul(z, x), y)) / 2
        + pow_(x, 2)
        + mul(y, cz)
        - mul(z, cy)
        - mul(x, DELTA)
    )


def _casimir_class_rep() -> NcPoly:
    # The B term is -B(alpha + delta), the sigma-image of A(beta - delta).
    # Writing it as +B(delta - alpha) gives an element off by 2*B*delta that
    # is not central.
    ab = acomm(A, B)
    return (
        pow_(D, 2)
        + pow_(A, 2)
        + pow_(B, 2)
        + (mul(DELTA + 2, ab) - acomm(pow_(A, 2), B) - acomm(A, pow_(B, 2))) / 2
        + mul(A, BETA - DELTA)
        - mul(B, ALPHA + DELTA)
    )


def unreduced_named() -> Dict[str, NcPoly]:
    """Every named element as written, in the free algebra (C, gamma expanded)."""
    return {
        "A": A,
        "B": B,
        "C": C,
        "D": D,
        "alpha": ALPHA,
        "beta": BETA,
        "gamma": GAMMA,
        "delta": DELTA,
        "Omega_A": _omega(A, B, C, BETA, GAMMA),
        "Omega_B": _omega(B, C, A, GAMMA, ALPHA),
        "Omega_C": _omega(C, A, B, ALPHA, BETA),
        "CasRep": _casimir_class_rep(),
    }


@lru_cache(maxsize=None)
def _named_table() -> Dict[str, NcPoly]:
    return {name: reduce(p) for name, p in unreduced_named().items()}


def named(name: str) -> NcPoly:
    """Reduced normal form of a named element."""
    try:
        return _named_table()[name]
    except KeyError:
        raise UnknownName(name) from None


# presentations


def presentation_relations(which: str) -> List[NcPoly]:
    """Relations of a presentation as ``lhs - rhs`` in the free algebra."""
    if which == "definition":
        rels = [comm(A, B) - 2 * D, comm(B, C) - 2 * D, comm(C, A) - 2 * D]
        rels += [
            comm(A, D) + mul(A, C) - mul(B, A) - ALPHA,
            comm(B, D) + mul(B, A) - mul(C, B) - BETA,
            comm(C, D) + mul(C, B) - mul(A, C) - GAMMA,
        ]
        for z in (ALPHA, BETA, GAMMA):
            rels += [comm(z, g) for g in (A, B, C, D)]
        return rels
    if which == "pres1":
        return [
            mul(B, A) - (mul(A, B) - 2 * D),
            mul(C, B) - (mul(B, C) - 2 * D),
            mul(C, A) - (mul(A, C) + 2 * D),
            mul(D, A) - (mul(A, D) - mul(B, A) + mul(A, C) - ALPHA),
            mul(D, B) - (mul(B, D) - mul(C, B) + mul(B, A) - BETA),
            comm(ALPHA, A), comm(ALPHA, B), comm(ALPHA, C),
            comm(BETA, A), comm(BETA, B), comm(BETA, C),
        ]
    if which == "pres2":
        return [
            mul(B, A) - (mul(A, B) - 2 * D),
            mul(D, A) - (mul(A, D) + mul(A, DELTA) - pow_(A, 2) - 2 * mul(A, B) + 2 * D - ALPHA),
            mul(B, D) - (mul(D, B) + mul(B, DELTA) - pow_(B, 2) - 2 * mul(A, B) + 2 * D + BETA),
            comm(ALPHA, A), comm(BETA, A), comm(DELTA, A),
            comm(ALPHA, B), comm(BETA, B), comm(DELTA, B),
            comm(ALPHA, DELTA), comm(BETA, DELTA),
        ]
    if which == "pres3":
        a2, b2 = pow_(A, 2), pow_(B, 2)
        return [
            comm(A, comm(A, comm(A, B))) - 2 * comm(a2, B),
            comm(B, comm(B, comm(B, A))) - 2 * comm(b2, A),
            comm(B, comm(A, comm(B, A)))
            - (2 * comm(A, b2) - 2 * comm(B, a2) - 2 * mul(comm(A, B), DELTA)),
            comm(A, comm(B, comm(A, B)))
            - (2 * comm(B, a2) - 2 * comm(A, b2) - 2 * mul(comm(B, A), DELTA)),
            comm(DELTA, A),
            comm(DELTA, B),
        ]
    raise ValueError(f"unknown presentation {which!r}")


PRESENTATIONS = ("definition", "pres1", "pres2", "pres3")


def alternate_identities() -> List[NcPoly]:
    ab = comm(A, B)
    return [
        D - ab / 2,
        ALPHA - (comm(A, ab) / 2 + mul(A, DELTA) - pow_(A, 2) - acomm(A, B)),
        BETA - (comm(B, ab) / 2 - mul(B, DELTA) + pow_(B, 2) + acomm(A, B)),
    ]


def is_central_subalgebra_element(p: NcPoly) -> bool:
    """True iff ``p`` reduces into the span of the words in alpha, delta, beta."""
    return all(x in CENTRAL_LETTERS for w in reduce(p).words() for x in w)


def is_casimir(p: NcPoly) -> bool:
    return is_central_subalgebra_element(p - named("CasRep"))


# morphisms


@dataclass(frozen=True)
class Morphism:
    """An (anti)homomorphism given by the images of the six primitive letters.

    ``reversing`` means products are sent to products of images in reverse order.
    """

    images: Tuple[NcPoly, ...]
    reversing: bool

    def __post_init__(self):
        if len(self.images) != 6:
            raise ValueError("a morphism needs exactly six letter images")
        object.__setattr__(self, "images", tuple(reduce(p) for p in self.images))

    def __call__(self, p: NcPoly) -> NcPoly:
        return apply(self, p)

    def compose(self, other: "Morphism") -> "Morphism":
        """``self ∘ other`` (apply ``other`` first)."""
        return Morphism(
            tuple(apply(self, img) for img in other.images),
            self.reversing != other.reversing,
        )


def apply(m: Morphism, p: NcPoly) -> NcPoly:
    """Image of ``p`` under ``m``, reduced to normal form."""
    out = NcPoly.zero()
    for word, coef in p.items():
        letters = reversed(word) if m.reversing else word
        img = NcPoly.one()
        for x in letters:
            img = rmul(img, m.images[x])
        out = out + img.scale(coef)
    return out


IDENTITY = Morphism((A, D, B, ALPHA, DELTA, BETA), False)
# letter order in images: A, D, B, alpha, delta, beta
SIGMA = Morphism((B, D, A, -BETA, DELTA, -ALPHA), True)
TAU = Morphism((B, -D, C, BETA, DELTA, GAMMA), True)


@dataclass(frozen=True)
class D6Element:
    """The group element sigma^reflected * tau^power of the dihedral group of order 12."""

    reflected: bool
    power: int

    def __post_init__(self):
        if not 0 <= self.power <= 5:
            raise PowerOutOfRange(f"tau power must lie in 0..5, got {self.power}")
        object.__setattr__(self, "reflected", bool(self.reflected))

    def __mul__(self, other: "D6Element") -> "D6Element":
        # tau^b sigma = sigma tau^-b, from (sigma tau)^2 = 1
        if other.reflected:
            return D6Element(not self.reflected, (other.power - self.power) % 6)
        return D6Element(self.reflected, (self.power + other.power) % 6)

    @property
    def inverse(self) -> "D6Element":
        if self.reflected:
            return self
        return D6Element(False, -self.power % 6)

    @property
    def name(self) -> str:
        parts = []
        if self.reflected:
            parts.append("sigma")
        if self.power == 1:
            parts.append("tau")
        elif self.power:
            parts.append(f"tau^{self.power}")
        return "*".join(parts) or "id"

    @cached_property
    def realized(self) -> Morphism:
        return _realize(self.reflected, self.power)


@lru_cache(maxsize=None)
def _realize(reflected: bool, power: int) -> Morphism:
    m = IDENTITY
    for _ in range(power):
        m = TAU.compose(m)
    if reflected:
        m = SIGMA.compose(m)
    return m


def d6_element(reflected: bool, power: int) -> D6Element:
    return D6Element(reflected, power)


def d6_elements() -> List[D6Element]:
    return [D6Element(r, k) for r in (False, True) for k in range(6)]


_NAME_RE = re.compile(r"^(?:(sigma)(?:\*(?=tau))?)?(?:(tau)(?:\^(\d+))?)?$")


def d6_from_name(name: str) -> D6Element:
    """Parse ``id``, ``sigma``, ``tau``, ``tau^3``, ``sigma*tau^2`` and the like."""
    name = name.strip().replace(" ", "")
    if name == "id":
        return D6Element(False, 0)
    m = _NAME_RE.match(name)
    if not name or m is None:
        raise ValueError(f"bad morphism name {name!r}")
    sig, tau, k = m.groups()
    power = 0
    if tau:
        power = int(k) if k is not None else 1
    return D6Element(bool(sig), power)
