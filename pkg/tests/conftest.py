"""Shared fixtures and tiny independent oracles used across the test suite.

The oracles here deliberately avoid the production code paths: closures are
computed on raw image tuples, counts by exhaustive loops.
"""

from __future__ import annotations

import itertools

import pytest

from inertia_lab.group_core import FiniteGroup, Mat2, Perm, enumerate_group


def tuple_compose(a: tuple, b: tuple) -> tuple:
    """(a o b)(x) = a(b(x)) on raw image tuples."""
    return tuple(a[j] for j in b)


def tuple_closure(gens: list[tuple]) -> set:
    """Independent brute-force closure on raw permutation tuples."""
    n = len(gens[0])
    identity = tuple(range(n))
    out = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple_compose(x, g)
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return out


def mat_closure(p: int, gens: list[tuple]) -> set:
    """Independent closure on raw (a, b, c, d) tuples mod p."""

    def mul(m, n):
        a, b, c, d = m
        e, f, g, h = n
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    identity = (1, 0, 0, 1)
    out = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return out


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    return enumerate_group([Perm((1, 2, 0)), Perm((1, 0, 2))])


@pytest.fixture(scope="session")
def s4() -> FiniteGroup:
    return enumerate_group([Perm((1, 2, 3, 0)), Perm((1, 0, 2, 3))])


@pytest.fixture(scope="session")
def gl2_f3() -> FiniteGroup:
    gens = [Mat2(3, 2, 0, 0, 1), Mat2(3, 1, 1, 0, 1), Mat2(3, 1, 0, 1, 1)]
    return enumerate_group(gens)


def all_tuples(pool, k):
    return itertools.product(pool, repeat=k)
