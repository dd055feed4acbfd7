"""Toric ideals of combinatorial neural codes.

Zone variables are indexed in canonical order (by weight, then support);
monomials are tuples of exponents in that order.
"""

from .binomial import (Binomial, GroebnerBasis, ResourceError, buchberger, is_groebner,
                       reduced_groebner)
from .classify import generated_by_quadratics, is_one_pierced_n3, is_zero_pierced
from .code import (Code, CodeFormatError, DomainError, c1_code, example_code, full_code,
                   internal_code, lawrence_code, load_code, parse_code, tree_code)
from .graphs import (delta_graph, depth1_indispensables, distance_two_partners, dual_graph,
                     expected_quadratic_count, find_embeddings, induced_binomial, load_patterns)
from .orders import Grevlex, Lex, WeightOrder, goy_order, omega_order, parse_order
from .toric import (a_set, b_set, graver_basis, ideal_is_zero, indispensable_binomials,
                    is_primitive, toric_generators, u_set, universal_gb,
                    verify_lawrence_row_equivalence)

__all__ = [
    "Binomial", "Code", "CodeFormatError", "DomainError", "Grevlex", "GroebnerBasis", "Lex",
    "ResourceError", "WeightOrder", "a_set", "b_set", "buchberger", "c1_code", "delta_graph",
    "depth1_indispensables", "distance_two_partners", "dual_graph", "example_code",
    "expected_quadratic_count", "find_embeddings", "full_code", "generated_by_quadratics",
    "goy_order", "graver_basis", "ideal_is_zero", "indispensable_binomials", "induced_binomial",
    "internal_code", "is_groebner", "is_one_pierced_n3", "is_primitive", "is_zero_pierced",
    "lawrence_code", "load_code", "load_patterns", "omega_order", "parse_code", "parse_order",
    "reduced_groebner", "toric_generators", "tree_code", "u_set", "universal_gb",
    "verify_lawrence_row_equivalence",
]
