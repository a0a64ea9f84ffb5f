"""Exact finite-group engine: enumeration, subgroup operations, quotients,
p-group invariants and product constructions."""

from .abelian import (
    AbelianType,
    abelian_group_from_factors,
    abelian_invariants,
    parse_abelian_type,
)
from .elements import (
    DirectPair,
    Element,
    Mat2,
    Perm,
    SemidirectElement,
    SemidirectLaw,
    WreathElement,
    WreathLaw,
    commutator,
)
from .group import (
    FiniteGroup,
    Subgroup,
    as_finite_group,
    enumerate_group,
    small_generating_set,
    subgroup_generated,
)
from .homs import Homomorphism, quotient_group
from .products import (
    direct_product,
    fiber_product,
    semidirect_product,
    subgroup_of_fiber,
    wreath_base_generator,
    wreath_product_regular,
)
from .specio import element_from_json, element_to_json, group_to_spec, parse_group_spec
from .structure import (
    all_subgroups,
    conjugacy_classes,
    element_of_order,
    exponent,
    frattini_p_group,
    generator_rank_p_group,
    intermediate_subgroups,
    is_conjugate_subgroup,
    is_p_group,
    minimal_generating_size,
    normal_closure,
    normalizer,
    sylow_p_subgroup,
)

__all__ = [
    "AbelianType",
    "DirectPair",
    "Element",
    "FiniteGroup",
    "Homomorphism",
    "Mat2",
    "Perm",
    "SemidirectElement",
    "SemidirectLaw",
    "Subgroup",
    "WreathElement",
    "WreathLaw",
    "abelian_group_from_factors",
    "abelian_invariants",
    "all_subgroups",
    "as_finite_group",
    "commutator",
    "conjugacy_classes",
    "direct_product",
    "element_from_json",
    "element_of_order",
    "element_to_json",
    "enumerate_group",
    "exponent",
    "fiber_product",
    "frattini_p_group",
    "generator_rank_p_group",
    "group_to_spec",
    "intermediate_subgroups",
    "is_conjugate_subgroup",
    "is_p_group",
    "minimal_generating_size",
    "normal_closure",
    "normalizer",
    "parse_abelian_type",
    "parse_group_spec",
    "quotient_group",
    "semidirect_product",
    "small_generating_set",
    "subgroup_generated",
    "subgroup_of_fiber",
    "sylow_p_subgroup",
    "wreath_base_generator",
    "wreath_product_regular",
]
