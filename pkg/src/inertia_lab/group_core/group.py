"""Finite groups as explicit element tables, built by closure from generators."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from ..config import Bounds, default_bounds
from ..errors import BoundExceeded, KindMismatch, NotInGroup
from .elements import Element, ensure_compatible


def closure(
    generators: Sequence[Element],
    bound: Optional[int] = None,
    within: Optional[frozenset] = None,
) -> set:
    """Multiplicative closure of the generators (always contains the identity).

    ``within``, when given, is a known-closed superset; it is used only for a
    cheap sanity check while generating subgroups.
    """
    if not generators:
        raise ValueError("need at least one generator to infer the element kind")
    first = generators[0]
    for g in generators[1:]:
        ensure_compatible(first, g)
    identity = first.identity()
    elems = {identity}
    frontier = [identity]
    gens = list(dict.fromkeys(generators))
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elems:
                    if within is not None and y not in within:
                        raise NotInGroup(f"{y!r} escaped the ambient group")
                    elems.add(y)
                    new_frontier.append(y)
                    if bound is not None and len(elems) > bound:
                        raise BoundExceeded(
                            f"closure exceeded bound {bound} (generators {generators!r})"
                        )
        frontier = new_frontier
    return elems


def small_generating_set(sorted_elems: Sequence[Element]) -> tuple[Element, ...]:
    """Greedy small generating set taken from a canonically ordered element list."""
    total = len(sorted_elems)
    if total == 1:
        return (sorted_elems[0],)
    gens: list[Element] = []
    have: set = {sorted_elems[0].identity()}
    for x in sorted_elems:
        if x in have:
            continue
        gens.append(x)
        have = closure(gens)
        if len(have) == total:
            break
    return tuple(gens)


class FiniteGroup:
    """A finite group with a cached element table.

    Elements carry their own multiplication; the group records the closure and
    offers order, membership and deterministic iteration.  Instances are
    treated as immutable once built and may be shared freely.
    """

    def __init__(self, elements: frozenset, generators: tuple, identity: Element):
        self.elements = elements
        self.generators = generators
        self.identity = identity
        self._sorted: Optional[tuple] = None

    @classmethod
    def generate(
        cls,
        generators: Iterable[Element],
        bound: Optional[int] = None,
        bounds: Optional[Bounds] = None,
    ) -> "FiniteGroup":
        """Group generated by ``generators`` (raises BoundExceeded past the cap)."""
        gens = tuple(generators)
        if not gens:
            raise ValueError("cannot infer element kind from an empty generator list")
        if bound is None:
            bound = (bounds or default_bounds()).closure_bound
        elems = closure(gens, bound=bound)
        return cls(frozenset(elems), gens, gens[0].identity())

    @classmethod
    def from_elements(
        cls,
        elements: Iterable[Element],
        generators: Optional[Iterable[Element]] = None,
        check: bool = False,
    ) -> "FiniteGroup":
        """Wrap an already-closed element set.

        ``check=True`` verifies closure under product and inverse, which is
        quadratic; constructors that build the set by definition skip it.
        """
        elems = frozenset(elements)
        if not elems:
            raise ValueError("a group has at least the identity")
        some = next(iter(elems))
        identity = some.identity()
        if identity not in elems:
            raise ValueError("identity missing from element set")
        if check:
            for a in elems:
                if a.inverse() not in elems:
                    raise ValueError(f"inverse of {a!r} missing")
                for b in elems:
                    if a * b not in elems:
                        raise ValueError(f"product {a!r}*{b!r} escapes the set")
        if generators is None:
            gens = small_generating_set(sorted(elems, key=lambda x: x.sort_key()))
        else:
            gens = tuple(generators)
        return cls(elems, gens, identity)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> tuple:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements, key=lambda x: x.sort_key()))
        return self._sorted

    def op(self, a: Element, b: Element) -> Element:
        return a * b

    def inv(self, a: Element) -> Element:
        return a.inverse()

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def element_orders(self) -> dict:
        return {x: x.order() for x in self.sorted_elements()}

    def subgroup(self, elements: Iterable[Element], generators=None) -> "Subgroup":
        return Subgroup(self, frozenset(elements), generators)

    def whole_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements, self.generators)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset([self.identity]), ())

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, gens={len(self.generators)})"


class Subgroup:
    """Subset of a parent FiniteGroup, closed under the group operations."""

    # Full closure verification is quadratic; above this size only spot checks
    # (generator products and inverses) are run.
    _FULL_CHECK_LIMIT = 1200

    def __init__(self, parent: FiniteGroup, elements: frozenset, generators=None):
        if not elements <= parent.elements:
            raise NotInGroup("subgroup elements must lie in the parent group")
        if parent.identity not in elements:
            raise ValueError("subgroup must contain the identity")
        if parent.order % len(elements) != 0:
            raise ValueError("subgroup order does not divide the parent order")
        self.parent = parent
        self.elements = elements
        if generators is None:
            generators = small_generating_set(
                sorted(elements, key=lambda x: x.sort_key())
            )
        self.generators = tuple(generators) or (parent.identity,)
        self._group: Optional[FiniteGroup] = None
        self._verify()

    def _verify(self):
        elems = self.elements
        if len(elems) <= self._FULL_CHECK_LIMIT:
            for a in elems:
                if a.inverse() not in elems:
                    raise ValueError(f"subgroup not closed under inverse at {a!r}")
            for a in self.generators:
                for b in elems:
                    if a * b not in elems:
                        raise ValueError("subgroup not closed under product")
        else:
            for a in self.generators:
                if a.inverse() not in elems:
                    raise ValueError("subgroup not closed under inverse")
                for b in self.generators:
                    if a * b not in elems:
                        raise ValueError("subgroup not closed under product")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> tuple:
        return tuple(sorted(self.elements, key=lambda x: x.sort_key()))

    def as_group(self) -> FiniteGroup:
        if self._group is None:
            self._group = FiniteGroup(self.elements, self.generators, self.parent.identity)
        return self._group

    def is_normal(self) -> bool:
        """Normality in the parent, checked on generators only."""
        for g in self.parent.generators:
            g_inv = g.inverse()
            for s in self.generators:
                if g_inv * s * g not in self.elements:
                    return False
        return True

    def same_as(self, other: "Subgroup") -> bool:
        return self.elements == other.elements

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.order})"


def as_finite_group(g) -> FiniteGroup:
    """Accept either a FiniteGroup or a Subgroup where a group is needed."""
    if isinstance(g, FiniteGroup):
        return g
    if isinstance(g, Subgroup):
        return g.as_group()
    raise TypeError(f"expected a group, got {type(g).__name__}")


def enumerate_group(
    generators: Iterable[Element],
    bound: Optional[int] = None,
    bounds: Optional[Bounds] = None,
) -> FiniteGroup:
    """Closure of a generator list into a FiniteGroup.

    Raises KindMismatch on mixed element kinds and BoundExceeded when the
    closure grows past the cap (default from config).
    """
    return FiniteGroup.generate(generators, bound=bound, bounds=bounds)


def subgroup_generated(group, elems: Iterable[Element]) -> Subgroup:
    """Smallest subgroup of ``group`` containing ``elems``."""
    G = as_finite_group(group)
    elems = tuple(elems)
    for x in elems:
        if x not in G.elements:
            raise NotInGroup(f"{x!r} is not in the group")
    if not elems:
        return Subgroup(G, frozenset([G.identity]), (G.identity,))
    made = closure(elems, within=G.elements)
    gens = tuple(dict.fromkeys(x for x in elems if x != G.identity)) or (G.identity,)
    return Subgroup(G, frozenset(made), gens)
