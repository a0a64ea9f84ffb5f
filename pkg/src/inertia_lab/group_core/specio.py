"""Group-spec JSON: parsing and serialization of groups and elements.

Spec documents:
    {"kind": "perm", "degree": n, "generators": [[...], ...]}      0-based images
    {"kind": "gl2", "p": p, "generators": [[a, b, c, d], ...]}     row-major
    {"kind": "semidirect", "normal": SPEC, "acting": SPEC,
     "action": {"<acting gen index>": [ELEM, ...]}}                images of normal gens
    {"kind": "abelian", "factors": [d1, ...]}

Elements serialize as image arrays (perm), entry quadruples (gl2), or
{"n":..., "h":...} / {"exps":..., "h":...} / {"left":..., "right":...}
for the product kinds.  All entries are exact integers.
"""

from __future__ import annotations

from typing import Any

from ..errors import InvalidSpec
from .abelian import abelian_group_from_factors
from .elements import (
    DirectPair,
    Element,
    Mat2,
    Perm,
    SemidirectElement,
    WreathElement,
)
from .group import FiniteGroup
from .products import semidirect_product


def element_to_json(x: Element) -> Any:
    if isinstance(x, Perm):
        return list(x.images)
    if isinstance(x, Mat2):
        return list(x.entries)
    if isinstance(x, SemidirectElement):
        return {"n": element_to_json(x.n), "h": element_to_json(x.h)}
    if isinstance(x, WreathElement):
        return {"exps": list(x.exps), "h": element_to_json(x.h)}
    if isinstance(x, DirectPair):
        return {"left": element_to_json(x.left), "right": element_to_json(x.right)}
    raise InvalidSpec(f"cannot serialize element of type {type(x).__name__}")


def element_from_json(data: Any, template: Element) -> Element:
    """Deserialize using a template element of the ambient group for context."""
    if isinstance(template, Perm):
        if not isinstance(data, list):
            raise InvalidSpec(f"expected image list, got {data!r}")
        return Perm(int(v) for v in data)
    if isinstance(template, Mat2):
        if not (isinstance(data, list) and len(data) == 4):
            raise InvalidSpec(f"expected 4 matrix entries, got {data!r}")
        return Mat2(template.p, *(int(v) for v in data))
    if isinstance(template, SemidirectElement):
        return SemidirectElement(
            template.law,
            element_from_json(data["n"], template.n),
            element_from_json(data["h"], template.h),
        )
    if isinstance(template, WreathElement):
        return WreathElement(
            template.law,
            tuple(int(v) for v in data["exps"]),
            element_from_json(data["h"], template.h),
        )
    if isinstance(template, DirectPair):
        return DirectPair(
            element_from_json(data["left"], template.left),
            element_from_json(data["right"], template.right),
        )
    raise InvalidSpec(f"cannot deserialize into kind {type(template).__name__}")


def parse_group_spec(doc: dict, bound: int | None = None) -> FiniteGroup:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InvalidSpec("group spec must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "perm":
        degree = int(doc.get("degree", 0))
        if degree < 1:
            raise InvalidSpec("perm spec needs a positive degree")
        raw = doc.get("generators") or []
        gens = []
        for images in raw:
            if len(images) != degree:
                raise InvalidSpec("generator length does not match degree")
            gens.append(Perm(int(v) for v in images))
        if not gens:
            gens = [Perm(range(degree))]
        return FiniteGroup.generate(gens, bound=bound)
    if kind == "gl2":
        p = int(doc.get("p", 0))
        if p < 2:
            raise InvalidSpec("gl2 spec needs a prime p")
        raw = doc.get("generators") or []
        gens = [Mat2(p, *(int(v) for v in entry)) for entry in raw]
        if not gens:
            gens = [Mat2(p, 1, 0, 0, 1)]
        return FiniteGroup.generate(gens, bound=bound)
    if kind == "abelian":
        factors = [int(v) for v in doc.get("factors", [])]
        return abelian_group_from_factors(factors)
    if kind == "semidirect":
        normal = parse_group_spec(doc["normal"], bound=bound)
        acting = parse_group_spec(doc["acting"], bound=bound)
        action_doc = doc.get("action") or {}
        action = {}
        for idx_str, images in action_doc.items():
            idx = int(idx_str)
            if not 0 <= idx < len(acting.generators):
                raise InvalidSpec(f"action key {idx_str} is not an acting generator index")
            hgen = acting.generators[idx]
            if len(images) != len(normal.generators):
                raise InvalidSpec("action images must match the normal generator list")
            action[hgen] = {
                ngen: element_from_json(img, normal.identity)
                for ngen, img in zip(normal.generators, images)
            }
        for i, hgen in enumerate(acting.generators):
            if hgen not in action:
                raise InvalidSpec(f"action missing for acting generator index {i}")
        return semidirect_product(normal, acting, action)
    raise InvalidSpec(f"unknown group kind {kind!r}")


def group_to_spec(G: FiniteGroup) -> dict:
    """Serialize groups whose elements have a spec-file representation."""
    sample = G.identity
    if isinstance(sample, Perm):
        return {
            "kind": "perm",
            "degree": sample.degree,
            "generators": [element_to_json(g) for g in G.generators],
        }
    if isinstance(sample, Mat2):
        return {
            "kind": "gl2",
            "p": sample.p,
            "generators": [element_to_json(g) for g in G.generators],
        }
    if isinstance(sample, SemidirectElement):
        law = sample.law
        normal_spec = group_to_spec(law.normal)
        acting_spec = group_to_spec(law.acting)
        action = {}
        for i, hgen in enumerate(law.acting.generators):
            table = law.act[hgen]
            action[str(i)] = [element_to_json(table[ngen]) for ngen in law.normal.generators]
        return {
            "kind": "semidirect",
            "normal": normal_spec,
            "acting": acting_spec,
            "action": action,
        }
    raise InvalidSpec(
        f"groups over {type(sample).__name__} elements have no spec-file form"
    )
