"""Sylow/Frattini subgroups, quotients, intermediate subgroups, conjugacy."""

from __future__ import annotations

import pytest

from inertia_lab.errors import NotAPGroup, NotNormal
from inertia_lab.group_core import (
    Mat2,
    Perm,
    abelian_group_from_factors,
    all_subgroups,
    enumerate_group,
    frattini_p_group,
    generator_rank_p_group,
    intermediate_subgroups,
    is_conjugate_subgroup,
    minimal_generating_size,
    quotient_group,
    subgroup_generated,
    sylow_p_subgroup,
)


def p_part(n, p):
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


class TestSylow:
    def test_s3_sylow3_is_a3(self, s3):
        syl = sylow_p_subgroup(s3, 3)
        assert syl.order == 3
        assert syl.elements == subgroup_generated(s3, [Perm((1, 2, 0))]).elements

    def test_p_not_dividing(self, s3):
        assert sylow_p_subgroup(s3, 5).order == 1

    def test_order_is_p_part_on_corpus(self, s4, gl2_f3):
        corpus = [s4, gl2_f3, abelian_group_from_factors([6, 12])]
        for G in corpus:
            for p in (2, 3, 5, 7):
                assert sylow_p_subgroup(G, p).order == p_part(G.order, p)

    def test_deterministic(self, s4):
        a = sylow_p_subgroup(s4, 2)
        b = sylow_p_subgroup(s4, 2)
        assert a.elements == b.elements


class TestFrattini:
    def test_elementary_abelian_trivial(self):
        g = abelian_group_from_factors([2, 2, 2, 2])
        assert frattini_p_group(g, 2).order == 1
        assert generator_rank_p_group(g, 2) == 4

    def test_cyclic_8(self):
        c8 = abelian_group_from_factors([8])
        phi = frattini_p_group(c8, 2)
        assert phi.order == 4  # the squares
        assert generator_rank_p_group(c8, 2) == 1

    def test_not_a_p_group(self, s3):
        with pytest.raises(NotAPGroup):
            frattini_p_group(s3, 2)

    def test_burnside_regeneration(self):
        # any lift of a Frattini-quotient basis generates the p-group
        g = abelian_group_from_factors([2, 4])
        phi = frattini_p_group(g, 2)
        quotient, proj = quotient_group(g, phi)
        rank = generator_rank_p_group(g, 2)
        assert quotient.order == 2**rank
        # pick one preimage per quotient generator
        lifts = []
        for qgen in quotient.generators:
            lifts.append(
                min(
                    (x for x in g.sorted_elements() if proj.apply(x) == qgen),
                    key=lambda e: e.sort_key(),
                )
            )
        assert subgroup_generated(g, lifts).order == g.order


class TestQuotient:
    def test_s3_mod_a3(self, s3):
        a3 = subgroup_generated(s3, [Perm((1, 2, 0))])
        q, proj = quotient_group(s3, a3)
        assert q.order == 2
        assert proj.kernel().elements == a3.elements

    def test_not_normal(self, s3):
        c2 = subgroup_generated(s3, [Perm((1, 0, 2))])
        with pytest.raises(NotNormal):
            quotient_group(s3, c2)

    def test_quotient_by_trivial(self):
        c6 = abelian_group_from_factors([6])
        q, proj = quotient_group(c6, c6.trivial_subgroup())
        assert q.order == 6
        assert all(proj.apply(x) is not None for x in c6.elements)


class TestIntermediate:
    def test_s3_over_a3(self, s3):
        a3 = subgroup_generated(s3, [Perm((1, 2, 0))])
        subs = intermediate_subgroups(s3, a3)
        assert sorted(s.order for s in subs) == [3, 6]

    def test_whole_group(self, s3):
        subs = intermediate_subgroups(s3, s3.whole_subgroup())
        assert [s.order for s in subs] == [6]

    def test_s3_all_subgroups(self, s3):
        # 1, three C2, A3, S3
        subs = all_subgroups(s3)
        assert sorted(s.order for s in subs) == [1, 2, 2, 2, 3, 6]


class TestConjugacy:
    def test_self_conjugate_identity_witness(self, s3):
        a3 = subgroup_generated(s3, [Perm((1, 2, 0))])
        ok, g = is_conjugate_subgroup(s3, a3, a3)
        assert ok and g == s3.identity

    def test_borels_conjugate_by_antidiagonal(self, gl2_f3):
        upper = subgroup_generated(gl2_f3, [Mat2(3, 2, 0, 0, 1), Mat2(3, 1, 0, 0, 2), Mat2(3, 1, 1, 0, 1)])
        lower = subgroup_generated(gl2_f3, [Mat2(3, 2, 0, 0, 1), Mat2(3, 1, 0, 0, 2), Mat2(3, 1, 0, 1, 1)])
        ok, g = is_conjugate_subgroup(gl2_f3, upper, lower)
        assert ok
        conj = frozenset(g.inverse() * x * g for x in upper.elements)
        assert conj == lower.elements
        anti = Mat2(3, 0, 1, 1, 0)
        assert frozenset(anti.inverse() * x * anti for x in upper.elements) == lower.elements

    def test_different_orders(self, s3):
        c2 = subgroup_generated(s3, [Perm((1, 0, 2))])
        a3 = subgroup_generated(s3, [Perm((1, 2, 0))])
        ok, g = is_conjugate_subgroup(s3, c2, a3)
        assert not ok and g is None


class TestMinimalGeneratingSize:
    def test_cyclic(self):
        assert minimal_generating_size(abelian_group_from_factors([6]), 2) == 1

    def test_klein(self):
        assert minimal_generating_size(abelian_group_from_factors([2, 2]), 3) == 2

    def test_trivial(self):
        assert minimal_generating_size(abelian_group_from_factors([]), 2) == 0

    def test_above_bound(self):
        g = abelian_group_from_factors([2, 2, 2, 2])
        assert minimal_generating_size(g, 3) is None

    def test_s3_needs_two(self, s3):
        assert minimal_generating_size(s3, 3) == 2
