"""Abelian types (invariant factors), decomposition and abelian group building."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import NotAbelian
from .elements import Perm
from .group import FiniteGroup, as_finite_group
from .structure import _prime_factors


@dataclass(frozen=True)
class AbelianType:
    """Invariant factor list d_1 | d_2 | ... | d_k (ascending, no 1 factors)."""

    factors: tuple[int, ...]

    def __init__(self, factors: Iterable[int]):
        cleaned = tuple(int(d) for d in factors if int(d) != 1)
        if any(d <= 0 for d in cleaned):
            raise ValueError("invariant factors must be positive")
        for a, b in zip(cleaned, cleaned[1:]):
            if b % a != 0:
                raise ValueError(f"not a divisibility chain: {cleaned}")
        object.__setattr__(self, "factors", cleaned)

    @property
    def order(self) -> int:
        return math.prod(self.factors) if self.factors else 1

    def is_trivial(self) -> bool:
        return not self.factors

    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def primary_partition(self, p: int) -> tuple[int, ...]:
        """Exponents of the p-power parts, descending (a partition)."""
        parts = []
        for d in self.factors:
            v = 0
            while d % p == 0:
                d //= p
                v += 1
            if v:
                parts.append(v)
        return tuple(sorted(parts, reverse=True))

    def primes(self) -> tuple[int, ...]:
        return tuple(_prime_factors(self.order))

    def embeds_in(self, other: "AbelianType") -> bool:
        """Subgroup-type test: per prime, componentwise domination of the
        descending exponent partitions."""
        for p in self.primes():
            mine = self.primary_partition(p)
            theirs = other.primary_partition(p)
            if len(mine) > len(theirs):
                return False
            if any(a > b for a, b in zip(mine, theirs)):
                return False
        return True

    def __str__(self):
        return "x".join(f"C{d}" for d in self.factors) if self.factors else "C1"


def parse_abelian_type(text: str) -> AbelianType:
    """Parse "4,4" style factor lists (CLI input format)."""
    parts = [int(tok) for tok in text.split(",") if tok.strip()]
    return AbelianType(parts)


def abelian_group_from_factors(factors: Sequence[int]) -> FiniteGroup:
    """C_{d_1} x ... x C_{d_k} as a permutation group on disjoint cycles."""
    dims = [int(d) for d in factors if int(d) > 1]
    degree = sum(dims) if dims else 1
    gens = []
    offset = 0
    for d in dims:
        gens.append(Perm.from_cycles(degree, range(offset, offset + d)))
        offset += d
    if not gens:
        gens = [Perm(range(1))]
    return FiniteGroup.generate(gens, bound=math.prod(dims) + 1 if dims else 2)


def abelian_invariants(group) -> AbelianType:
    """Invariant factors of an abelian group.

    Per prime q the partition of the q-primary part is recovered from the
    counts of elements killed by q^k; the factors then interleave largest
    with largest across primes.
    """
    G = as_finite_group(group)
    if not G.is_abelian():
        raise NotAbelian("abelian_invariants needs an abelian group")
    order = G.order
    if order == 1:
        return AbelianType(())
    partitions: dict[int, list[int]] = {}
    for q in _prime_factors(order):
        # m_k = log_q #{x : x^(q^k) = 1}; the differences n_k = m_k - m_(k-1)
        # count the parts >= k, i.e. form the conjugate partition.
        counts = []
        k = 1
        while True:
            c = sum(1 for x in G.elements if x ** (q**k) == G.identity)
            m = round(math.log(c, q))
            if q**m != c:
                raise AssertionError("element-kill count is not a prime power")
            counts.append(m)
            if len(counts) > 1 and counts[-1] == counts[-2]:
                break
            k += 1
            if k > 64:
                raise AssertionError("runaway exponent loop")
        diffs = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, len(counts))]
        diffs = [d for d in diffs if d > 0]
        parts = [sum(1 for d in diffs if d >= i) for i in range(1, max(diffs) + 1)]
        partitions[q] = sorted(parts, reverse=True)
    width = max(len(v) for v in partitions.values())
    factors = []
    for i in range(width):
        d = 1
        for q, parts in partitions.items():
            if i < len(parts):
                d *= q ** parts[i]
        factors.append(d)
    factors.reverse()  # ascending divisibility chain
    out = AbelianType(factors)
    if out.order != order:
        raise AssertionError("invariant factor product mismatch")
    return out
