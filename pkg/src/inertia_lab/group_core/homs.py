"""Homomorphisms (verified via their graph subgroup) and quotient groups."""

from __future__ import annotations

from typing import Mapping, Optional

from ..errors import InvalidHomomorphism, NotInGroup, NotNormal
from .elements import DirectPair, Element, Perm
from .group import FiniteGroup, Subgroup, as_finite_group, closure, subgroup_generated


class Homomorphism:
    """Map between finite groups, given on generators of the source.

    Well-definedness is verified by generating the graph subgroup of
    source x target from the pairs (g, image(g)): the generator map extends
    to a homomorphism exactly when that subgroup has one pair per source
    element, i.e. projects bijectively onto the source.
    """

    def __init__(self, source: FiniteGroup, target: FiniteGroup, genmap: Mapping):
        self.source = source
        self.target = target
        missing = [g for g in source.generators if g not in genmap]
        if missing:
            raise InvalidHomomorphism(f"no image given for generators {missing!r}")
        for g, img in genmap.items():
            if g not in source.elements:
                raise NotInGroup(f"{g!r} is not in the source group")
            if img not in target.elements:
                raise NotInGroup(f"{img!r} is not in the target group")
        pairs = [DirectPair(g, genmap[g]) for g in source.generators]
        graph = closure(pairs)
        if len(graph) != source.order:
            raise InvalidHomomorphism(
                "generator map does not extend to a homomorphism "
                f"(graph size {len(graph)} != source order {source.order})"
            )
        self.mapping = {pair.left: pair.right for pair in graph}
        self._image: Optional[Subgroup] = None

    def apply(self, x: Element) -> Element:
        try:
            return self.mapping[x]
        except KeyError:
            raise NotInGroup(f"{x!r} is not in the source group") from None

    __call__ = apply

    def image(self) -> Subgroup:
        if self._image is None:
            self._image = subgroup_generated(
                self.target, [self.mapping[g] for g in self.source.generators]
            )
        return self._image

    def kernel(self) -> Subgroup:
        ker = frozenset(x for x, y in self.mapping.items() if y == self.target.identity)
        return Subgroup(self.source, ker)

    def is_surjective(self) -> bool:
        return self.image().order == self.target.order

    def __repr__(self):
        return f"Homomorphism({self.source!r} -> {self.target!r})"


def quotient_group(group, normal: Subgroup) -> tuple[FiniteGroup, Homomorphism]:
    """G/N as a permutation group on left cosets, with the projection map.

    Cosets are ordered by their minimal element key, so the construction is
    deterministic.  Raises NotNormal when N is not normal in G.
    """
    G = as_finite_group(group)
    if not normal.elements <= G.elements:
        raise NotInGroup("normal subgroup must lie inside the group")
    reembedded = normal if normal.parent is G else Subgroup(G, normal.elements)
    if not reembedded.is_normal():
        raise NotNormal("subgroup is not normal; quotient undefined")

    coset_of: dict = {}
    reps: list = []
    for x in G.sorted_elements():
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for n in normal.elements:
            coset_of[x * n] = idx

    def act(g: Element) -> Perm:
        return Perm(coset_of[g * rep] for rep in reps)

    genmap = {g: act(g) for g in G.generators}
    quotient = FiniteGroup.generate(
        tuple(genmap.values()) or (Perm(range(len(reps))),), bound=len(reps) + 1
    )
    if quotient.order != len(reps):
        raise AssertionError("quotient closure did not match the coset count")
    projection = Homomorphism(G, quotient, genmap)
    return quotient, projection
