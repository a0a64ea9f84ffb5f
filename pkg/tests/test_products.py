"""Semidirect, wreath and fiber products; abelian invariants."""

from __future__ import annotations

import pytest

from inertia_lab.errors import NotAbelian, NotAnAction, TargetMismatch
from inertia_lab.group_core import (
    AbelianType,
    Homomorphism,
    Perm,
    abelian_group_from_factors,
    abelian_invariants,
    direct_product,
    enumerate_group,
    fiber_product,
    normal_closure,
    semidirect_product,
    subgroup_generated,
    wreath_base_generator,
    wreath_product_regular,
)


def cyclic(n):
    return abelian_group_from_factors([n])


class TestSemidirect:
    def test_trivial_action_is_direct_product(self, s3):
        c2 = cyclic(2)
        action = {h: {n: n for n in s3.generators} for h in c2.generators}
        semi = semidirect_product(s3, c2, action)
        direct = direct_product(s3, c2)
        assert semi.order == direct.order == 12
        # element-for-element: (n, h) parts multiply identically
        pairs = {(x.n, x.h) for x in semi.elements}
        assert pairs == {(y.left, y.right) for y in direct.elements}
        for a in semi.sorted_elements()[:6]:
            for b in semi.sorted_elements()[:6]:
                c = a * b
                assert (c.n, c.h) == ((a.n * b.n), (a.h * b.h))

    def test_frobenius_21(self):
        c7, c3 = cyclic(7), cyclic(3)
        gen7, gen3 = c7.generators[0], c3.generators[0]
        action = {gen3: {gen7: gen7 * gen7}}  # x -> x^2, 2^3 = 1 mod 7
        g = semidirect_product(c7, c3, action)
        assert g.order == 21
        assert not g.is_abelian()

    def test_bad_action_rejected(self):
        c7, c5 = cyclic(7), cyclic(5)
        gen7, gen5 = c7.generators[0], c5.generators[0]
        # x -> x^2 has order 3 on C7, incompatible with |C5| = 5
        action = {gen5: {gen7: gen7 * gen7}}
        with pytest.raises(NotAnAction):
            semidirect_product(c7, c5, action)

    def test_non_automorphism_rejected(self):
        c4, c2 = cyclic(4), cyclic(2)
        gen4, gen2 = c4.generators[0], c2.generators[0]
        action = {gen2: {gen4: gen4 * gen4}}  # x -> x^2 is not bijective
        with pytest.raises(NotAnAction):
            semidirect_product(c4, c2, action)


class TestWreath:
    def test_trivial_top(self):
        w = wreath_product_regular(3, cyclic(1))
        assert w.order == 3

    def test_c2_top_order(self):
        w = wreath_product_regular(3, cyclic(2))
        assert w.order == 18

    def test_s3_top_order(self, s3):
        w = wreath_product_regular(3, s3)
        assert w.order == 3**6 * 6

    def test_base_is_normal_closure_of_delta(self, s3):
        w = wreath_product_regular(3, s3)
        delta = wreath_base_generator(w)
        base = normal_closure(w, [delta])
        assert base.order == 3**6
        assert all(x.h == x.h.identity() for x in base.elements)

    def test_closure_check_small(self):
        w = wreath_product_regular(2, cyclic(2))
        from inertia_lab.group_core import FiniteGroup

        rebuilt = FiniteGroup.from_elements(w.elements, w.generators, check=True)
        assert rebuilt.order == 8


class TestFiber:
    def test_diagonal(self, s3):
        ident = Homomorphism(s3, s3, {g: g for g in s3.generators})
        fp = fiber_product(s3, s3, ident, ident)
        assert fp.order == 6
        assert all(x.left == x.right for x in fp.elements)

    def test_c4_mod2(self):
        c4a, c4b, c2 = cyclic(4), cyclic(4), cyclic(2)
        proj_a = Homomorphism(c4a, c2, {c4a.generators[0]: c2.generators[0]})
        proj_b = Homomorphism(c4b, c2, {c4b.generators[0]: c2.generators[0]})
        fp = fiber_product(c4a, c4b, proj_a, proj_b)
        assert fp.order == 4 * 4 // 2

    def test_size_formula(self, s3):
        c2 = cyclic(2)
        sgn = Homomorphism(s3, c2, {
            s3.generators[0]: c2.identity if s3.generators[0].order() == 3 else c2.generators[0],
            s3.generators[1]: c2.identity if s3.generators[1].order() == 3 else c2.generators[0],
        })
        ident = Homomorphism(c2, c2, {c2.generators[0]: c2.generators[0]})
        fp = fiber_product(s3, c2, sgn, ident)
        assert fp.order == s3.order * c2.order // 2

    def test_target_mismatch(self, s3):
        c2, c3 = cyclic(2), cyclic(3)
        sgn = Homomorphism(s3, c2, {
            g: (c2.identity if g.order() == 3 else c2.generators[0]) for g in s3.generators
        })
        triv = Homomorphism(c3, c3, {c3.generators[0]: c3.generators[0]})
        with pytest.raises(TargetMismatch):
            fiber_product(s3, c3, sgn, triv)


class TestAbelianInvariants:
    def test_c6(self):
        assert abelian_invariants(cyclic(6)).factors == (6,)

    def test_c2_x_c4(self):
        assert abelian_invariants(abelian_group_from_factors([2, 4])).factors == (2, 4)

    def test_units_mod5_cyclic(self):
        # (Z/5)^x as a permutation group on {1,2,3,4} under multiplication
        images = []
        pts = [1, 2, 3, 4]
        g = Perm(tuple(pts.index((2 * x) % 5) for x in pts))
        units = enumerate_group([g])
        assert abelian_invariants(units).factors == (4,)

    def test_non_abelian_rejected(self, s3):
        with pytest.raises(NotAbelian):
            abelian_invariants(s3)

    def test_merge_across_primes(self):
        assert abelian_invariants(abelian_group_from_factors([2, 6])).factors == (2, 6)
        assert abelian_invariants(abelian_group_from_factors([4, 3])).factors == (12,)

    def test_trivial(self):
        assert abelian_invariants(abelian_group_from_factors([])).factors == ()


class TestAbelianType:
    def test_normalization(self):
        assert AbelianType([1, 2, 4]).factors == (2, 4)

    def test_rejects_bad_chain(self):
        with pytest.raises(ValueError):
            AbelianType([4, 2])

    def test_embedding(self):
        assert AbelianType([2, 2]).embeds_in(AbelianType([2, 4]))
        assert not AbelianType([4]).embeds_in(AbelianType([2, 2]))
        assert AbelianType([]).embeds_in(AbelianType([5]))

    def test_embedding_matches_brute_force(self, s3):
        # brute force: I embeds in G iff G has a subgroup with I's invariants
        from inertia_lab.group_core import all_subgroups

        for g_factors in ([4], [2, 4], [2, 2, 2], [12], [6]):
            G = abelian_group_from_factors(g_factors)
            sub_types = {
                abelian_invariants(s.as_group()).factors for s in all_subgroups(G)
            }
            for i_factors in ([], [2], [4], [2, 2], [3], [6], [2, 4], [8]):
                I = AbelianType(i_factors)
                if I.order > G.order:
                    continue
                assert I.embeds_in(abelian_invariants(G)) == (I.factors in sub_types)
