"""Element arithmetic, closure enumeration and basic subgroup operations."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inertia_lab.errors import BoundExceeded, KindMismatch, NotInGroup
from inertia_lab.group_core import (
    FiniteGroup,
    Mat2,
    Perm,
    enumerate_group,
    normal_closure,
    subgroup_generated,
)

from .conftest import mat_closure, tuple_closure


class TestPerm:
    def test_compose_convention(self):
        a = Perm((1, 0, 2))
        b = Perm((0, 2, 1))
        # (a*b)(x) = a(b(x))
        assert (a * b).images == tuple(a.images[b.images[x]] for x in range(3))

    def test_inverse_and_order(self):
        c = Perm((1, 2, 0))
        assert c * c.inverse() == c.identity()
        assert c.order() == 3
        assert Perm((1, 0, 3, 2)).order() == 2

    def test_from_cycles(self):
        assert Perm.from_cycles(4, [0, 1, 2]) == Perm((1, 2, 0, 3))

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Perm((0, 0, 1))

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatch):
            Perm((0, 1)) * Perm((0, 1, 2))
        with pytest.raises(KindMismatch):
            Perm((0, 1)) * Mat2(3, 1, 0, 0, 1)


class TestMat2:
    def test_rejects_singular(self):
        with pytest.raises(ValueError):
            Mat2(5, 2, 4, 1, 2)

    def test_inverse(self):
        m = Mat2(7, 2, 3, 1, 4)
        assert m * m.inverse() == m.identity()

    def test_det_trace(self):
        m = Mat2(5, 2, 0, 0, 3)
        assert m.det() == 1
        assert m.trace() == 0


class TestEnumerate:
    def test_identity_only(self):
        g = enumerate_group([Perm((0, 1, 2))])
        assert g.order == 1

    def test_s3_closure_matches_raw_oracle(self):
        oracle = tuple_closure([(1, 2, 0), (1, 0, 2)])
        assert len(oracle) == 6
        g = enumerate_group([Perm((1, 2, 0)), Perm((1, 0, 2))])
        assert g.order == 6
        assert {x.images for x in g.elements} == oracle

    def test_borel_type_subgroup_mod5(self):
        # <diag(2,1), (1 1; 0 1)> mod 5
        oracle = mat_closure(5, [(2, 0, 0, 1), (1, 1, 0, 1)])
        assert len(oracle) == 20
        g = enumerate_group([Mat2(5, 2, 0, 0, 1), Mat2(5, 1, 1, 0, 1)])
        assert g.order == 20

    def test_bound_exceeded(self):
        with pytest.raises(BoundExceeded):
            enumerate_group([Perm((1, 2, 3, 4, 0))], bound=3)

    def test_determinism_of_sorted_elements(self):
        g1 = enumerate_group([Perm((1, 2, 0)), Perm((1, 0, 2))])
        g2 = enumerate_group([Perm((1, 0, 2)), Perm((1, 2, 0))])
        assert g1.sorted_elements() == g2.sorted_elements()


class TestSubgroupGenerated:
    def test_empty_gives_trivial(self, s3):
        sub = subgroup_generated(s3, [])
        assert sub.order == 1

    def test_a3(self, s3):
        sub = subgroup_generated(s3, [Perm((1, 2, 0))])
        assert sub.order == 3

    def test_center_of_gl2_f3(self, gl2_f3):
        sub = subgroup_generated(gl2_f3, [Mat2(3, 2, 0, 0, 2)])
        assert sub.order == 2

    def test_not_in_group(self, s3):
        with pytest.raises(NotInGroup):
            subgroup_generated(s3, [Perm((0, 1, 2, 3))])

    @given(st.sets(st.integers(min_value=0, max_value=23), max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_lagrange(self, idxs):
        gens = [Perm((1, 2, 3, 0)), Perm((1, 0, 2, 3))]
        s4 = enumerate_group(gens)
        elems = s4.sorted_elements()
        sub = subgroup_generated(s4, [elems[i] for i in idxs])
        assert s4.order % sub.order == 0


class TestNormalClosure:
    def test_transposition_generates_s3(self, s3):
        nc = normal_closure(s3, [Perm((1, 0, 2))])
        assert nc.order == 6

    def test_three_cycle_gives_a3(self, s3):
        nc = normal_closure(s3, [Perm((1, 2, 0))])
        assert nc.order == 3
        assert nc.is_normal()

    def test_abelian_gives_cyclic(self):
        c6 = enumerate_group([Perm((1, 2, 3, 4, 5, 0))])
        g = Perm((2, 3, 4, 5, 0, 1))  # square of the generator
        nc = normal_closure(c6, [g])
        assert nc.order == 3
        assert nc.elements == subgroup_generated(c6, [g]).elements

    def test_contains_plain_closure_and_is_normal(self, s4):
        seed = [Perm((1, 0, 2, 3))]
        nc = normal_closure(s4, seed)
        plain = subgroup_generated(s4, seed)
        assert plain.elements <= nc.elements
        assert nc.is_normal()
