"""Certificates attached to realizability verdicts.

Every Realizable verdict carries enough data to re-validate from scratch:
the tame part as a pair (sigma, tau) with its (e, f, r) bookkeeping, the wild
part as a single element whose conjugates generate the wild inertia, and for
the abelian regime the cyclotomic construction data.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from ..group_core import Element, FiniteGroup, Homomorphism, Subgroup


class Status(enum.Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not_realizable"
    OUT_OF_REGIME = "out_of_regime"


@dataclass
class TameWitness:
    """Elements sigma, tau of the tame quotient with tau^sigma = tau^p.

    e is the order of tau, f the index of <tau>, and sigma^f = tau^r.  The
    congruences p^f = 1 (mod e) and r(p-1) = 0 (mod e) are derived from the
    found elements rather than required as input; their residues are recorded.
    """

    sigma: Element
    tau: Element
    e: int
    f: int
    r: int
    p: int
    pf_mod_e: int = field(default=0)
    rp1_mod_e: int = field(default=0)

    def __post_init__(self):
        if self.e > 0:
            self.pf_mod_e = pow(self.p, self.f, self.e) if self.e > 1 else 0
            self.rp1_mod_e = (self.r * (self.p - 1)) % self.e if self.e > 1 else 0

    def validate(self, group: FiniteGroup, inertia_elements: frozenset) -> bool:
        """Re-check every relation by direct multiplication inside ``group``."""
        sigma, tau = self.sigma, self.tau
        if sigma not in group.elements or tau not in group.elements:
            return False
        if tau.order() != self.e:
            return False
        from ..group_core import subgroup_generated

        tau_gp = subgroup_generated(group, [tau])
        if tau_gp.elements != inertia_elements:
            return False
        if group.order != self.e * self.f:
            return False
        if sigma.inverse() * tau * sigma != tau**self.p:
            return False
        if sigma**self.f != tau**self.r:
            return False
        if subgroup_generated(group, [sigma, tau]).order != group.order:
            return False
        return True


@dataclass
class WildWitness:
    """One element of the wild inertia whose D-conjugates generate it."""

    a: Element

    def validate(self, D: FiniteGroup, wild_elements: frozenset) -> bool:
        from ..group_core import normal_closure

        if self.a not in D.elements:
            return False
        return normal_closure(D, [self.a]).elements == wild_elements


@dataclass
class AbelianWitness:
    """Cyclotomic construction data for the abelian regime.

    n: the inertia type is a quotient of the units mod p^n.  For each cyclic
    factor of order n_i of the target group a prime q_i = 1 (mod n_i),
    distinct and different from p.
    """

    n: int
    primes: tuple[int, ...]
    factor_orders: tuple[int, ...]

    def validate(self, p: int) -> bool:
        if len(self.primes) != len(self.factor_orders):
            return False
        if len(set(self.primes)) != len(self.primes):
            return False
        for q, n_i in zip(self.primes, self.factor_orders):
            if q == p or n_i < 1 or (q - 1) % n_i != 0:
                return False
        return True


@dataclass
class RealizabilityVerdict:
    status: Status
    reason: str = ""
    p: Optional[int] = None
    D: Optional[Subgroup] = None
    inertia: Optional[Subgroup] = None
    tame: Optional[TameWitness] = None
    tame_quotient: Optional[FiniteGroup] = None
    tame_projection: Optional[Homomorphism] = None
    sigma_lift: Optional[Element] = None
    tau_lift: Optional[Element] = None
    wild: Optional[WildWitness] = None
    abelian: Optional[AbelianWitness] = None

    @property
    def realizable(self) -> bool:
        return self.status is Status.REALIZABLE

    def __bool__(self) -> bool:
        return self.realizable
