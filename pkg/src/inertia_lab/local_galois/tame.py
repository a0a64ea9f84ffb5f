"""Tame realizability: D is the Galois group of a tamely ramified extension
of Q_p with inertia I exactly when D = <sigma, tau | tau^e, sigma^f = tau^r,
tau^sigma = tau^p> with I = <tau>.

The search is organized around the observation that once tau is fixed with
<tau> = I normal, the remaining conditions say precisely that sigma maps to
a generator of the cyclic quotient D/<tau> and conjugates tau to tau^p; the
relation sigma^f in <tau> is then automatic.  A direct quadratic search over
all (tau, sigma) pairs is kept alongside as a reference oracle.
"""

from __future__ import annotations

import math
from typing import Optional

from ..group_core import (
    FiniteGroup,
    Subgroup,
    as_finite_group,
    subgroup_generated,
)
from .witnesses import RealizabilityVerdict, Status, TameWitness


def _dlog_in_cyclic(base, target, order: int) -> Optional[int]:
    x = base.identity()
    for k in range(order):
        if x == target:
            return k
        x = x * base
    return None


def _tau_candidates(D: FiniteGroup, I: Subgroup, p: int):
    e = I.order
    if math.gcd(e, p) != 1:
        return
    for tau in I.sorted_elements():
        if tau.order() == e:
            yield tau


def tame_realizable(group, inertia: Subgroup, p: int) -> RealizabilityVerdict:
    """Search for a valid (tau, sigma) pair; Realizable iff one exists.

    Conditions on a witness: gcd(|tau|, p) = 1, <tau> = I, tau^sigma = tau^p,
    <sigma, tau> = D and sigma^f in <tau> for f = [D : <tau>].  These force D
    to be isomorphic to the presented tame group: D satisfies the relations
    and has order e*f while the presented group has order at most e*f.
    """
    D = as_finite_group(group)
    I = inertia if inertia.parent is D else Subgroup(D, inertia.elements)
    e = I.order
    f = D.order // e

    def not_realizable(reason: str) -> RealizabilityVerdict:
        return RealizabilityVerdict(status=Status.NOT_REALIZABLE, reason=reason, p=p)

    if math.gcd(e, p) != 1:
        return not_realizable(f"|I| = {e} is divisible by p = {p}")
    if not I.is_normal():
        return not_realizable("inertia subgroup is not normal")

    for tau in _tau_candidates(D, I, p):
        tau_p = tau**p
        # cosets of <tau> and the induced sigma-image orders
        coset_of: dict = {}
        reps: list = []
        for x in D.sorted_elements():
            if x in coset_of:
                continue
            idx = len(reps)
            reps.append(x)
            for t in I.elements:
                coset_of[x * t] = idx
        id_coset = coset_of[D.identity]
        for sigma in D.sorted_elements():
            if sigma.inverse() * tau * sigma != tau_p:
                continue
            # sigma must generate the cyclic quotient D/<tau> of order f;
            # sigma^f in <tau> is then automatic.
            x = sigma
            count = 1
            while coset_of[x] != id_coset and count <= f:
                x = x * sigma
                count += 1
            if count != f:
                continue
            r = _dlog_in_cyclic(tau, sigma**f, e)
            if r is None:
                continue
            witness = TameWitness(sigma=sigma, tau=tau, e=e, f=f, r=r, p=p)
            return RealizabilityVerdict(
                status=Status.REALIZABLE,
                reason=f"tame presentation with e={e}, f={f}, r={r}",
                p=p,
                D=D.whole_subgroup(),
                inertia=I,
                tame=witness,
            )
    return not_realizable("no (tau, sigma) pair satisfies the tame relations")


def tame_realizable_bruteforce(group, inertia: Subgroup, p: int) -> bool:
    """Reference oracle: literal search over all pairs in D^2."""
    D = as_finite_group(group)
    I = inertia if inertia.parent is D else Subgroup(D, inertia.elements)
    e = I.order
    f = D.order // e
    for tau in D.sorted_elements():
        if math.gcd(tau.order(), p) != 1:
            continue
        tau_gp = subgroup_generated(D, [tau])
        if tau_gp.elements != I.elements:
            continue
        tau_p = tau**p
        for sigma in D.sorted_elements():
            if sigma.inverse() * tau * sigma != tau_p:
                continue
            if subgroup_generated(D, [sigma, tau]).order != D.order:
                continue
            if sigma**f not in tau_gp.elements:
                continue
            return True
    return False
