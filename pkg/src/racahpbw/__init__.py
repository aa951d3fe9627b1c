"""Exact normal forms, D6 symmetry, Casimir elements and center checks for the universal Racah algebra."""

from .analysis import (
    CenterReport,
    LeadingTerm,
    algebraic_independence_check,
    center_basis,
    commutator_degree_checks,
    degree,
    leading_multiplicativity_check,
    leading_term,
    monomial_count,
    omega_power_congruence,
    pbw_omega_basis_check,
)
from .exprlang import parse, print_canonical
from .freealg import Letter, NcPoly, anticommutator, commutator, linear_combine, mul, pow_
from .racah import (
    Morphism,
    D6Element,
    alternate_identities,
    apply,
    d6_element,
    is_casimir,
    is_central_subalgebra_element,
    named,
    presentation_relations,
)
from .rewrite import ReductionSystem, check_confluence, is_normal, reduce, reduce_word

__version__ = "0.1.0"
