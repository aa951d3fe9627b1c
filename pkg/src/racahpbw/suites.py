"""Named verification suites run by ``racahpbw verify``.

A suite is an ordered list of ``(check_name, thunk)``; each thunk returns a
bool. Bounds and the sampling seed come from a ``Settings`` object.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from . import analysis as an
from .freealg import NcPoly, commutator
from .linalg import rank
from .racah import (
    IDENTITY,
    PRESENTATIONS,
    SIGMA,
    TAU,
    alternate_identities,
    apply,
    d6_elements,
    is_casimir,
    is_central_subalgebra_element,
    named,
    presentation_relations,
)
from .rewrite import check_confluence, default_system, reduce, reduce_word, rmul

Check = Tuple[str, Callable[[], bool]]

GENERATORS = ("A", "B", "C", "D", "alpha", "beta", "gamma", "delta")
CASIMIRS = ("Omega_A", "Omega_B", "Omega_C")


@dataclass
class Settings:
    fuel: int = 10**7
    center_bound_max: int = an.DEFAULT_CENTER_MAX
    independence_bound_max: int = an.DEFAULT_INDEPENDENCE_MAX
    pbw_bound_max: int = an.DEFAULT_PBW_MAX
    seed: int = 20180101
    format: str = "text"


def bda_expected() -> NcPoly:
    """The 18-term normal form of the overlap word B D A."""
    A, D, B, al, de, be = range(6)
    return NcPoly({
        (A, D, B): 1, (D, D): -2, (A, A, B): -3, (A, B, B): -3, (A, D): 6, (D, B): 6,
        (A, B, de): 2, (D, de): -2, (A, A): -2, (B, B): -2, (A, B): -8, (A, be): 1,
        (A, de): 2, (B, al): -1, (B, de): 2, (D,): 8, (al,): -2, (be,): 2,
    })


def _all_zero(polys) -> bool:
    return all(reduce(p).is_zero() for p in polys)


def _generator_images(m) -> Tuple[NcPoly, ...]:
    return tuple(apply(m, NcPoly.letter(x)) for x in range(6))


def _presentations(cfg: Settings) -> List[Check]:
    return [(w, lambda w=w: _all_zero(presentation_relations(w))) for w in PRESENTATIONS]


def _alternate(cfg: Settings) -> List[Check]:
    names = ("D", "alpha", "beta")
    return [(n, lambda p=p: reduce(p).is_zero()) for n, p in zip(names, alternate_identities())]


def _d6_group(cfg: Settings) -> List[Check]:
    ident = _generator_images(IDENTITY)
    elems = d6_elements()

    def power_is_identity(m, n):
        total = IDENTITY
        for _ in range(n):
            total = m.compose(total)
        return _generator_images(total) == ident and not total.reversing

    def group_law():
        return all(
            x.realized.compose(y.realized) == (x * y).realized for x in elems for y in elems
        )

    def well_defined(m):
        return all(
            apply(m, r).is_zero()
            for w in ("definition", "pres2")
            for r in presentation_relations(w)
        )

    return [
        ("sigma^2 = 1", lambda: power_is_identity(SIGMA, 2)),
        ("tau^6 = 1", lambda: power_is_identity(TAU, 6)),
        ("(sigma tau)^2 = 1", lambda: power_is_identity(SIGMA.compose(TAU), 2)),
        ("group law on 144 pairs", group_law),
        ("sigma respects relations", lambda: well_defined(SIGMA)),
        ("tau respects relations", lambda: well_defined(TAU)),
    ]


def _d6_faithful(cfg: Settings) -> List[Check]:
    def distinct():
        return len({_generator_images(g.realized) for g in d6_elements()}) == 12

    return [("12 distinct images", distinct)]


def _centrality(cfg: Settings) -> List[Check]:
    def central(name):
        om = named(name)
        return all(reduce(commutator(om, named(g))).is_zero() for g in GENERATORS)

    return [(n, lambda n=n: central(n)) for n in CASIMIRS + ("CasRep",)]


def _casimir_class(cfg: Settings) -> List[Check]:
    om = {n: named(n) for n in CASIMIRS}
    table = {
        SIGMA: {"Omega_A": "Omega_B", "Omega_B": "Omega_A", "Omega_C": "Omega_C"},
        TAU: {"Omega_A": "Omega_B", "Omega_B": "Omega_C", "Omega_C": "Omega_A"},
    }

    def permutation_table():
        return all(apply(m, om[src]) == om[dst] for m, row in table.items() for src, dst in row.items())

    checks: List[Check] = [
        ("Omega_B - Omega_C = alpha + alpha delta",
         lambda: reduce(om["Omega_B"] - om["Omega_C"]) == NcPoly({(3,): 1, (3, 4): 1})),
        ("Omega_C = CasRep", lambda: reduce(om["Omega_C"] - named("CasRep")).is_zero()),
    ]
    checks += [(f"is_casimir({n})", lambda n=n: is_casimir(om[n])) for n in CASIMIRS]
    checks += [
        ("D6 permutes the Omegas", permutation_table),
        ("class is D6-stable", lambda: all(is_casimir(apply(g.realized, om["Omega_A"])) for g in d6_elements())),
        ("central subalgebra is D6-stable", lambda: all(
            is_central_subalgebra_element(apply(g.realized, NcPoly({(3, 4, 5): 1, (4, 4): -2, (5,): 1})))
            for g in d6_elements()
        )),
    ]
    return checks


def _confluence(cfg: Settings) -> List[Check]:
    return [
        ("20 overlap ambiguities", lambda: len(check_confluence()) == 20),
        ("all overlaps resolvable", lambda: all(r.resolvable for r in check_confluence())),
        ("no inclusion ambiguities", lambda: not default_system().inclusion_ambiguities()),
    ]


def _bda(cfg: Settings) -> List[Check]:
    def both_paths():
        rep = next(r for r in check_confluence() if r.overlap_word == (2, 1, 0))
        return rep.left_path_result == rep.right_path_result == bda_expected()

    return [
        ("reduce(B D A) golden value", lambda: reduce_word((2, 1, 0)) == bda_expected()),
        ("both BDA paths agree", both_paths),
    ]


def _filtration(cfg: Settings) -> List[Check]:
    def product_bound():
        rng = random.Random(cfg.seed)
        for _ in range(100):
            m, n = rng.randint(0, 3), rng.randint(0, 3)
            u, v = an.random_polynomial(rng, m), an.random_polynomial(rng, n)
            if an.degree(rmul(u, v)) > m + n:
                return False
        return True

    def product_spans():
        for m, n in ((1, 1), (1, 2), (2, 2), (1, 3)):
            prods = [
                dict(rmul(NcPoly.monomial(u), NcPoly.monomial(v)).items())
                for u in an.normal_words(m)
                for v in an.normal_words(n)
            ]
            if rank(prods) != an.monomial_count(m + n):
                return False
        return True

    def d6_stable():
        rng = random.Random(cfg.seed + 1)
        for _ in range(20):
            p = an.random_polynomial(rng, 3)
            if any(an.degree(apply(g.realized, p)) > an.degree(p) for g in d6_elements()):
                return False
        return True

    return [
        ("dim R_0..R_2 = 1, 6, 22", lambda: [an.monomial_count(n) for n in range(3)] == [1, 6, 22]),
        ("dim R_5 = 314", lambda: an.monomial_count(5) == 314),
        ("R_m R_n in R_(m+n)", product_bound),
        ("R_m R_n = R_(m+n)", product_spans),
        ("R_n is D6-stable", d6_stable),
        ("commutator degree lemma", lambda: an.commutator_degree_checks(2, 1, 2)),
    ]


def _leading(cfg: Settings) -> List[Check]:
    return [("200 sampled products", lambda: an.leading_multiplicativity_check(200, 4, cfg.seed))]


def _omega_powers(cfg: Settings) -> List[Check]:
    return [
        ("degree(Omega_A) = 4", lambda: an.degree(named("Omega_A")) == 4),
        ("Omega^n = D^2n mod R_(4n-1), n <= 2", lambda: an.omega_power_congruence(2)),
    ]


def _center(cfg: Settings) -> List[Check]:
    top = min(5, cfg.center_bound_max)
    return [
        (f"bound {n}", lambda n=n: an.center_basis(n, cfg.center_bound_max).matches)
        for n in range(top + 1)
    ]


def _independence(cfg: Settings) -> List[Check]:
    b = cfg.independence_bound_max
    return [(f"weight <= {b}", lambda: an.algebraic_independence_check(b, b))]


def _pbw_omega(cfg: Settings) -> List[Check]:
    return [
        (f"bound {n}", lambda n=n: an.pbw_omega_basis_check(n, cfg.pbw_bound_max))
        for n in range(cfg.pbw_bound_max + 1)
    ]


CATALOGUE: Dict[str, Callable[[Settings], List[Check]]] = {
    "presentations": _presentations,
    "alternate-identities": _alternate,
    "d6-group": _d6_group,
    "d6-faithful": _d6_faithful,
    "casimir-centrality": _centrality,
    "casimir-class": _casimir_class,
    "confluence": _confluence,
    "bda": _bda,
    "filtration": _filtration,
    "leading-terms": _leading,
    "omega-powers": _omega_powers,
    "center": _center,
    "independence": _independence,
    "pbw-omega": _pbw_omega,
}

SUITE_NAMES = tuple(CATALOGUE) + ("all",)


def suite_checks(name: str, cfg: Settings) -> List[Tuple[str, str, Callable[[], bool]]]:
    """``(suite, check, thunk)`` triples for a suite name or ``all``."""
    if name == "all":
        names = list(CATALOGUE)
    elif name in CATALOGUE:
        names = [name]
    else:
        raise KeyError(name)
    return [(s, c, fn) for s in names for c, fn in CATALOGUE[s](cfg)]

