"""Concrete group elements.

Three storage kinds cover every group built here: permutations, invertible
2x2 matrices over F_p, and product tuples (direct pairs plus the twisted
pairs used by semidirect and wreath constructions).  Elements are immutable,
hashable and totally ordered via ``sort_key`` so searches and JSON output
are reproducible run to run.
"""

from __future__ import annotations

import math
from typing import Iterable

from ..errors import KindMismatch


class Element:
    """Common surface: ``a * b``, ``a.inverse()``, ``a.identity()``, keys."""

    __slots__ = ()

    def inverse(self):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def sort_key(self):
        raise NotImplementedError

    def compat_key(self):
        """Two elements multiply only if their compat keys agree."""
        raise NotImplementedError

    def order(self) -> int:
        e = self.identity()
        k, x = 1, self
        while x != e:
            x = x * self
            k += 1
        return k

    def conj_by(self, g):
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def ensure_compatible(a: Element, b: Element) -> None:
    if a.compat_key() != b.compat_key():
        raise KindMismatch(f"cannot combine {a!r} with {b!r}")


def commutator(a: Element, b: Element, convention: str = "inv-inv") -> Element:
    """(a, b) under one of the two usual conventions.

    ``inv-inv``: a^-1 b^-1 a b.  ``plain-inv``: a b a^-1 b^-1.
    """
    if convention == "inv-inv":
        return a.inverse() * b.inverse() * a * b
    if convention == "plain-inv":
        return a * b * a.inverse() * b.inverse()
    raise ValueError(f"unknown commutator convention {convention!r}")


class Perm(Element):
    """Permutation of {0, ..., n-1}; ``(a*b)(x) = a(b(x))``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):  # immutability
        raise AttributeError("Perm is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        ensure_compatible(self, other)
        a = self.images
        return Perm(a[j] for j in other.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def identity(self) -> "Perm":
        return Perm(range(len(self.images)))

    def cycles(self) -> list[list[int]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(cyc)
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    @staticmethod
    def from_cycles(degree: int, *cycles: Iterable[int]) -> "Perm":
        """Build from disjoint 0-based cycles; unmentioned points are fixed."""
        images = list(range(degree))
        for cyc in cycles:
            cyc = list(cyc)
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return Perm(images)

    def sort_key(self):
        return (0, len(self.images), self.images)

    def compat_key(self):
        return ("perm", len(self.images))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(("perm", self.images))

    def __repr__(self):
        cycs = [c for c in self.cycles() if len(c) > 1]
        if not cycs:
            return "Perm(id/%d)" % len(self.images)
        return "Perm(%s)" % "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


class Mat2(Element):
    """Invertible 2x2 matrix over F_p, entries row-major (a b; c d)."""

    __slots__ = ("p", "a", "b", "c", "d")

    def __init__(self, p: int, a: int, b: int, c: int, d: int):
        a, b, c, d = a % p, b % p, c % p, d % p
        if (a * d - b * c) % p == 0:
            raise ValueError(f"singular matrix ({a} {b}; {c} {d}) mod {p}")
        for name, val in (("p", p), ("a", a), ("b", b), ("c", c), ("d", d)):
            object.__setattr__(self, name, val)

    def __setattr__(self, *a):
        raise AttributeError("Mat2 is immutable")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def __mul__(self, other: "Mat2") -> "Mat2":
        ensure_compatible(self, other)
        p = self.p
        return Mat2(
            p,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2":
        p = self.p
        inv_det = pow(self.det(), -1, p)
        return Mat2(p, self.d * inv_det, -self.b * inv_det, -self.c * inv_det, self.a * inv_det)

    def identity(self) -> "Mat2":
        return Mat2(self.p, 1, 0, 0, 1)

    def sort_key(self):
        return (1, self.p, self.entries)

    def compat_key(self):
        return ("mat2", self.p)

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.p == other.p and self.entries == other.entries

    def __hash__(self):
        return hash(("mat2", self.p, self.entries))

    def __repr__(self):
        return f"Mat2[{self.a} {self.b}; {self.c} {self.d} mod {self.p}]"


class DirectPair(Element):
    """Componentwise pair; used for direct and fiber products and hom graphs."""

    __slots__ = ("left", "right")

    def __init__(self, left: Element, right: Element):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, *a):
        raise AttributeError("DirectPair is immutable")

    def __mul__(self, other: "DirectPair") -> "DirectPair":
        ensure_compatible(self, other)
        return DirectPair(self.left * other.left, self.right * other.right)

    def inverse(self) -> "DirectPair":
        return DirectPair(self.left.inverse(), self.right.inverse())

    def identity(self) -> "DirectPair":
        return DirectPair(self.left.identity(), self.right.identity())

    def sort_key(self):
        return (2, self.left.sort_key(), self.right.sort_key())

    def compat_key(self):
        return ("pair", self.left.compat_key(), self.right.compat_key())

    def __eq__(self, other):
        return (
            isinstance(other, DirectPair)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash(("pair", self.left, self.right))

    def __repr__(self):
        return f"({self.left!r}, {self.right!r})"


class SemidirectLaw:
    """Multiplication data for N x| H: a full table h -> automorphism of N.

    ``act[h]`` maps every element of N to its image under the automorphism
    assigned to h.  The table is validated by the semidirect constructor.
    """

    __slots__ = ("normal", "acting", "act")

    def __init__(self, normal, acting, act):
        self.normal = normal
        self.acting = acting
        self.act = act

    def apply(self, h, n):
        return self.act[h][n]


class SemidirectElement(Element):
    """Pair (n, h) with twisted multiplication through a shared law."""

    __slots__ = ("law", "n", "h")

    def __init__(self, law: SemidirectLaw, n: Element, h: Element):
        object.__setattr__(self, "law", law)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "h", h)

    def __setattr__(self, *a):
        raise AttributeError("SemidirectElement is immutable")

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        ensure_compatible(self, other)
        law = self.law
        return SemidirectElement(law, self.n * law.apply(self.h, other.n), self.h * other.h)

    def inverse(self) -> "SemidirectElement":
        law = self.law
        h_inv = self.h.inverse()
        return SemidirectElement(law, law.apply(h_inv, self.n.inverse()), h_inv)

    def identity(self) -> "SemidirectElement":
        return SemidirectElement(self.law, self.n.identity(), self.h.identity())

    def sort_key(self):
        return (3, self.n.sort_key(), self.h.sort_key())

    def compat_key(self):
        return ("semidirect", id(self.law))

    def __eq__(self, other):
        return (
            isinstance(other, SemidirectElement)
            and self.law is other.law
            and self.n == other.n
            and self.h == other.h
        )

    def __hash__(self):
        return hash(("semi", self.n, self.h))

    def __repr__(self):
        return f"({self.n!r} |x {self.h!r})"


class WreathLaw:
    """Multiplication data for the regular wreath product C_p wr H.

    The base part is a function H -> C_p stored as an exponent tuple indexed
    by the fixed ordering ``elems`` of H; ``shift[h]`` precomputes the index
    permutation i -> index(h^-1 * elems[i]) implementing the left regular
    translation action.
    """

    __slots__ = ("p", "acting", "elems", "index", "shift")

    def __init__(self, p: int, acting):
        self.p = p
        self.acting = acting
        self.elems = acting.sorted_elements()
        self.index = {x: i for i, x in enumerate(self.elems)}
        self.shift = {}
        for h in self.elems:
            h_inv = h.inverse()
            self.shift[h] = tuple(self.index[h_inv * x] for x in self.elems)

    def translate(self, h, exps):
        table = self.shift[h]
        return tuple(exps[table[i]] for i in range(len(exps)))


class WreathElement(Element):
    """Pair (f, h) with f: H -> C_p acted on by left translation."""

    __slots__ = ("law", "exps", "h")

    def __init__(self, law: WreathLaw, exps: Iterable[int], h: Element):
        exps = tuple(e % law.p for e in exps)
        if len(exps) != len(law.elems):
            raise ValueError("exponent tuple has wrong length")
        object.__setattr__(self, "law", law)
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "h", h)

    def __setattr__(self, *a):
        raise AttributeError("WreathElement is immutable")

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        ensure_compatible(self, other)
        law = self.law
        moved = law.translate(self.h, other.exps)
        exps = tuple((a + b) % law.p for a, b in zip(self.exps, moved))
        return WreathElement(law, exps, self.h * other.h)

    def inverse(self) -> "WreathElement":
        law = self.law
        h_inv = self.h.inverse()
        moved = law.translate(h_inv, self.exps)
        return WreathElement(law, tuple(-e % law.p for e in moved), h_inv)

    def identity(self) -> "WreathElement":
        return WreathElement(self.law, (0,) * len(self.law.elems), self.h.identity())

    def sort_key(self):
        return (4, self.exps, self.h.sort_key())

    def compat_key(self):
        return ("wreath", id(self.law))

    def __eq__(self, other):
        return (
            isinstance(other, WreathElement)
            and self.law is other.law
            and self.exps == other.exps
            and self.h == other.h
        )

    def __hash__(self):
        return hash(("wreath", self.exps, self.h))

    def __repr__(self):
        return f"(exps={self.exps} wr {self.h!r})"
