"""Structural subgroup operations: normal closures, Sylow and Frattini
subgroups, intermediate-subgroup enumeration, conjugacy testing and
minimal generating size."""

from __future__ import annotations

import math
from typing import Iterable, Optional

from ..config import Bounds, default_bounds
from ..errors import BoundExceeded, NotAPGroup, NotInGroup
from .elements import Element, commutator
from .group import FiniteGroup, Subgroup, as_finite_group, closure, subgroup_generated


def normal_closure(group, elems: Iterable[Element]) -> Subgroup:
    """Smallest normal subgroup of the group containing ``elems``.

    The set of all conjugates of the seed elements under words in the group
    generators is closed first; the subgroup it generates is conjugation
    stable, hence normal.
    """
    G = as_finite_group(group)
    elems = [x for x in elems]
    for x in elems:
        if x not in G.elements:
            raise NotInGroup(f"{x!r} is not in the group")
    seeds = [x for x in elems if x != G.identity]
    if not seeds:
        return G.trivial_subgroup()
    orbit = set(seeds)
    frontier = list(seeds)
    conjugators = [(g, g.inverse()) for g in G.generators]
    while frontier:
        new = []
        for x in frontier:
            for g, g_inv in conjugators:
                y = g_inv * x * g
                if y not in orbit:
                    orbit.add(y)
                    new.append(y)
        frontier = new
    made = closure(sorted(orbit, key=lambda e: e.sort_key()), within=G.elements)
    return Subgroup(G, frozenset(made), tuple(seeds))


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def normalizer(G: FiniteGroup, H: Subgroup) -> list:
    """Elements g of G with g^-1 H g = H, in canonical order."""
    out = []
    hset = H.elements
    gens = H.generators
    for g in G.sorted_elements():
        g_inv = g.inverse()
        if all(g_inv * h * g in hset for h in gens):
            out.append(g)
    return out


def sylow_p_subgroup(group, p: int) -> Subgroup:
    """A Sylow p-subgroup, deterministic under the canonical element order.

    Builds up from p-elements: while the index is divisible by p, quotient
    theory guarantees a p-element of the normalizer can extend the current
    p-subgroup; the first such element in canonical order is used.
    """
    G = as_finite_group(group)
    target = _p_part(G.order, p)
    current = G.trivial_subgroup()
    if target == 1:
        return current
    while current.order < target:
        norm = normalizer(G, current)
        extended = False
        for g in norm:
            if g in current.elements:
                continue
            k = g.order()
            q = _p_part(k, p)
            if q == 1:
                continue
            h = g ** (k // q)  # p-element, nontrivial power of g
            if h in current.elements:
                continue
            candidate = subgroup_generated(G, tuple(current.generators) + (h,))
            if candidate.order == _p_part(candidate.order, p):
                current = candidate
                extended = True
                break
        if not extended:
            raise AssertionError("Sylow construction stalled; group table corrupt?")
    return current


def is_p_group(G: FiniteGroup, p: int) -> bool:
    return G.order == _p_part(G.order, p)


def frattini_p_group(group, p: int) -> Subgroup:
    """Frattini subgroup of a p-group: generated by p-th powers and commutators."""
    P = as_finite_group(group)
    if not is_p_group(P, p):
        raise NotAPGroup(f"group of order {P.order} is not a {p}-group")
    if P.order == 1:
        return P.trivial_subgroup()
    elems = P.sorted_elements()
    seeds = set()
    for x in elems:
        seeds.add(x ** p)
    for a in elems:
        for b in elems:
            seeds.add(commutator(a, b))
    seeds.discard(P.identity)
    if not seeds:
        return P.trivial_subgroup()
    return subgroup_generated(P, sorted(seeds, key=lambda e: e.sort_key()))


def generator_rank_p_group(group, p: int) -> int:
    """dim_{F_p} of P / Phi(P) (Burnside basis theorem)."""
    P = as_finite_group(group)
    phi = frattini_p_group(P, p)
    index = P.order // phi.order
    rank = 0
    while index > 1:
        if index % p:
            raise AssertionError("Frattini index not a p-power")
        index //= p
        rank += 1
    return rank


def intermediate_subgroups(group, inner: Subgroup, bounds: Optional[Bounds] = None) -> list:
    """All subgroups D with inner <= D <= G.

    Breadth-first closure over single-generator extensions; every chain from
    ``inner`` to a given D is realized by adding elements of D one at a time,
    so the search is exhaustive.  Deduplicated by element set; conjugates are
    not merged.
    """
    G = as_finite_group(group)
    if not inner.elements <= G.elements:
        raise NotInGroup("inner subgroup must lie inside the group")
    limit = (bounds or default_bounds()).index_bound
    if G.order // inner.order > limit:
        raise BoundExceeded(
            f"index {G.order // inner.order} exceeds intermediate-subgroup bound {limit}"
        )
    base = inner if inner.parent is G else Subgroup(G, inner.elements)
    seen = {base.elements: base}
    frontier = [base]
    while frontier:
        new = []
        for D in frontier:
            if D.order == G.order:
                continue
            for g in G.sorted_elements():
                if g in D.elements:
                    continue
                bigger = subgroup_generated(G, tuple(D.generators) + (g,))
                if bigger.elements not in seen:
                    seen[bigger.elements] = bigger
                    new.append(bigger)
        frontier = new
    out = sorted(
        seen.values(),
        key=lambda s: (s.order, tuple(x.sort_key() for x in s.sorted_elements())),
    )
    return out


def is_conjugate_subgroup(group, a: Subgroup, b: Subgroup):
    """(True, g) with g^-1 a g = b, or (False, None) after exhausting G."""
    G = as_finite_group(group)
    if a.order != b.order:
        return False, None
    bset = b.elements
    for g in G.sorted_elements():
        g_inv = g.inverse()
        if all(g_inv * x * g in bset for x in a.generators):
            if frozenset(g_inv * x * g for x in a.elements) == bset:
                return True, g
    return False, None


def conjugacy_classes(G: FiniteGroup) -> list:
    """Conjugacy class representatives with their classes, canonically ordered."""
    remaining = set(G.elements)
    gens = [(g, g.inverse()) for g in G.generators]
    out = []
    for x in G.sorted_elements():
        if x not in remaining:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g, g_inv in gens:
                    z = g_inv * y * g
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        remaining -= orbit
        out.append((x, orbit))
    return out


def minimal_generating_size(group, bound: int) -> Optional[int]:
    """Smallest k <= bound with a generating k-tuple, or None when none exists.

    For p-groups this is the Frattini rank.  Otherwise an exhaustive search
    with conjugacy pruning on the first slot (generation is invariant under
    simultaneous conjugation).
    """
    if bound > 4:
        raise ValueError("generation search is capped at tuples of length 4")
    G = as_finite_group(group)
    if G.order == 1:
        return 0
    factors = {p for p in _prime_factors(G.order)}
    if len(factors) == 1:
        (p,) = factors
        rank = generator_rank_p_group(G, p)
        return rank if rank <= bound else None
    reps = [rep for rep, _ in conjugacy_classes(G)]
    elems = G.sorted_elements()

    def extends(prefix: tuple, depth: int) -> bool:
        if subgroup_generated(G, prefix).order == G.order:
            return True
        if depth == 0:
            return False
        return any(extends(prefix + (x,), depth - 1) for x in elems)

    for k in range(1, bound + 1):
        for rep in reps:
            if extends((rep,), k - 1):
                return k
    return None


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def all_subgroups(G: FiniteGroup, bounds: Optional[Bounds] = None) -> list:
    """Every subgroup of a small group (BFS over generator extensions)."""
    return intermediate_subgroups(G, G.trivial_subgroup(), bounds=bounds)


def element_of_order(G: FiniteGroup, n: int) -> Optional[Element]:
    for x in G.sorted_elements():
        if x.order() == n:
            return x
    return None


def exponent(G: FiniteGroup) -> int:
    return math.lcm(*(x.order() for x in G.elements))
