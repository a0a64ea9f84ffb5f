"""Group constructions: semidirect products, regular wreath products,
direct and fiber products."""

from __future__ import annotations

from typing import Mapping, Optional

from ..config import Bounds, default_bounds
from ..errors import BoundExceeded, NotAnAction, TargetMismatch
from .elements import DirectPair, SemidirectElement, SemidirectLaw, WreathElement, WreathLaw
from .group import FiniteGroup, Subgroup
from .homs import Homomorphism


def _automorphism_table(N: FiniteGroup, genmap: Mapping) -> dict:
    """Extend a map on N's generators to a full automorphism table, or raise."""
    try:
        hom = Homomorphism(N, N, dict(genmap))
    except Exception as exc:
        raise NotAnAction(f"generator map is not an endomorphism of N: {exc}") from exc
    if hom.image().order != N.order:
        raise NotAnAction("generator map is not bijective on N")
    return dict(hom.mapping)


def semidirect_product(
    N: FiniteGroup,
    H: FiniteGroup,
    action: Mapping,
) -> FiniteGroup:
    """N x| H for an action given on H's generators.

    ``action`` maps each generator of H to a map from N's generators into N.
    Each per-generator map must extend to an automorphism of N, and the
    assignment must extend to a homomorphism H -> Aut(N); both are verified
    on full tables (NotAnAction otherwise).
    """
    for hgen in H.generators:
        if hgen not in action:
            raise NotAnAction(f"no automorphism assigned to generator {hgen!r}")
    gen_tables = {hgen: _automorphism_table(N, action[hgen]) for hgen in H.generators}

    identity_table = {x: x for x in N.elements}
    act: dict = {H.identity: identity_table}
    frontier = [H.identity]
    while frontier:
        new = []
        for h in frontier:
            table = act[h]
            for hgen in H.generators:
                h2 = h * hgen
                gen_table = gen_tables[hgen]
                # omega(h * hgen) = omega(h) o omega(hgen)
                composed = {x: table[gen_table[x]] for x in N.elements}
                if h2 in act:
                    if act[h2] != composed:
                        raise NotAnAction(
                            "generator maps do not extend to a homomorphism H -> Aut(N)"
                        )
                else:
                    act[h2] = composed
                    new.append(h2)
        frontier = new
    if len(act) != H.order:
        raise NotAnAction("action table does not cover H")

    law = SemidirectLaw(N, H, act)
    elements = [
        SemidirectElement(law, n, h) for n in N.sorted_elements() for h in H.sorted_elements()
    ]
    generators = [SemidirectElement(law, ngen, H.identity) for ngen in N.generators] + [
        SemidirectElement(law, N.identity, hgen) for hgen in H.generators
    ]
    return FiniteGroup.from_elements(elements, generators)


def wreath_product_regular(
    p: int, H: FiniteGroup, bounds: Optional[Bounds] = None
) -> FiniteGroup:
    """Regular wreath product C_p wr H = F_p[H] x| H.

    The base is the group of functions H -> C_p acted on by left translation;
    its canonical generator is the delta function at the identity of H, whose
    H-orbit spans the base.
    """
    limit = (bounds or default_bounds()).closure_bound
    size = p ** H.order * H.order
    if size > limit:
        raise BoundExceeded(f"wreath product of size {size} exceeds bound {limit}")
    law = WreathLaw(p, H)
    n = H.order
    zero = (0,) * n

    exps_pool = [()]
    for _ in range(n):
        exps_pool = [tup + (v,) for tup in exps_pool for v in range(p)]
    elements = [
        WreathElement(law, exps, h) for exps in exps_pool for h in law.elems
    ]
    delta = [0] * n
    delta[law.index[H.identity]] = 1
    generators = [WreathElement(law, tuple(delta), H.identity)] + [
        WreathElement(law, zero, hgen) for hgen in H.generators
    ]
    return FiniteGroup.from_elements(elements, generators)


def wreath_base_generator(W: FiniteGroup) -> WreathElement:
    """The delta-at-identity base generator of a wreath product group."""
    for g in W.generators:
        if isinstance(g, WreathElement) and g.h == g.h.identity():
            return g
    raise ValueError("not a wreath product built by wreath_product_regular")


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    elements = [
        DirectPair(a, b) for a in G1.sorted_elements() for b in G2.sorted_elements()
    ]
    generators = [DirectPair(g, G2.identity) for g in G1.generators] + [
        DirectPair(G1.identity, g) for g in G2.generators
    ]
    return FiniteGroup.from_elements(elements, generators)


def fiber_product(
    G1: FiniteGroup,
    G2: FiniteGroup,
    phi1: Homomorphism,
    phi2: Homomorphism,
) -> FiniteGroup:
    """Subgroup of G1 x G2 of pairs agreeing in the common quotient H.

    Both maps must be surjections onto the same H (TargetMismatch otherwise).
    """
    if phi1.source is not G1 or phi2.source is not G2:
        raise TargetMismatch("homomorphisms must start at the given factors")
    same_target = phi1.target is phi2.target or (
        phi1.target.elements == phi2.target.elements
    )
    if not same_target:
        raise TargetMismatch("fiber product needs a common target group")
    if not phi1.is_surjective() or not phi2.is_surjective():
        raise TargetMismatch("fiber product needs surjective structure maps")

    buckets: dict = {}
    for g2 in G2.sorted_elements():
        buckets.setdefault(phi2.apply(g2), []).append(g2)
    elements = []
    for g1 in G1.sorted_elements():
        for g2 in buckets.get(phi1.apply(g1), ()):
            elements.append(DirectPair(g1, g2))
    return FiniteGroup.from_elements(elements)


def fiber_projections(fp: FiniteGroup) -> tuple:
    """Left/right projection functions for a fiber (or direct) product group."""
    return (lambda x: x.left), (lambda x: x.right)


def subgroup_of_fiber(fp: FiniteGroup, predicate) -> Subgroup:
    """Subgroup of a fiber product cut out by a predicate on pairs."""
    return Subgroup(fp, frozenset(x for x in fp.elements if predicate(x)))
