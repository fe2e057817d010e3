"""Evaluate the expectation tables attached to fixtures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from .axioms import (
    check_cw,
    check_diamond,
    check_graded,
    check_semi_diamond,
    check_strongly_decomposable,
    check_strongly_initial_unsplittable,
    check_strongly_unsplittable,
    linked_clusters,
    unsigned_points,
    validate_bounded_acyclic,
)
from .category import Category, UnknownNameError, opposite
from .constructions import category_of_upper_categories, lower_category, upper_category
from .fixtures import Expectation, FixtureSpec
from .iso import is_isomorphic
from .nerve import euler_characteristic, nerve_of, realize


@dataclass(frozen=True)
class Outcome:
    expectation: Expectation
    actual: Any

    @property
    def ok(self) -> bool:
        return self.actual == self.expectation.expected


def resolve_morphism(c: Category, ref: str) -> int:
    """A morphism name, or ``X->Y`` for the unique morphism between two objects."""
    if "->" in ref:
        x, y = (c.object_id(s.strip()) for s in ref.split("->"))
        hs = c.hom(x, y)
        if len(hs) != 1:
            raise UnknownNameError(f"{ref!r} names {len(hs)} morphisms")
        return hs[0]
    return c.morphism_id(ref)


def _pair(c: Category, arg: str) -> tuple[int, int]:
    x, y = arg.split(",")
    return c.object_id(x), c.object_id(y)


def _signs(c: Category) -> bool:
    return not unsigned_points(c)


def hasse_cycle_length(c: Category) -> Optional[int]:
    """Length of the Hasse diagram of the proper part if it is a single cycle, else None."""
    proper = set(c.proper_objects())
    edges = [m for m in c.nondecomposable if c.sources[m] in proper and c.targets[m] in proper]
    degree = {x: 0 for x in proper}
    for m in edges:
        degree[c.sources[m]] += 1
        degree[c.targets[m]] += 1
    if not proper or any(d != 2 for d in degree.values()) or len(edges) != len(proper):
        return None
    return len(proper) if len(linked_clusters(c)) == 1 else None


_PROPS: dict[str, Callable[[Category, Optional[str]], Any]] = {
    "objects": lambda c, a: c.n_objects,
    "morphisms": lambda c, a: c.n_morphisms,
    "hom": lambda c, a: len(c.hom(*_pair(c, a))),
    "hasse_edges": lambda c, a: sum(1 for m in c.nondecomposable
                                    if (c.sources[m], c.targets[m]) == _pair(c, a)),
    "factorizations": lambda c, a: len(c.factorizations(resolve_morphism(c, a))),
    "bounded_acyclic": lambda c, a: validate_bounded_acyclic(c).verdict,
    "graded": lambda c, a: check_graded(c).verdict,
    "semi_diamond": lambda c, a: check_semi_diamond(c, _signs(c)).verdict,
    "diamond": lambda c, a: check_diamond(c, "proper", _signs(c)).verdict,
    "diamond_all": lambda c, a: check_diamond(c, "all", _signs(c)).verdict,
    "strongly_decomposable": lambda c, a: check_strongly_decomposable(c).verdict,
    "strongly_unsplittable": lambda c, a: check_strongly_unsplittable(c).verdict,
    "strongly_initial_unsplittable": lambda c, a: check_strongly_initial_unsplittable(c).verdict,
    "cw": lambda c, a: check_cw(c).verdict,
    "clusters": lambda c, a: len(linked_clusters(c)),
    "nerve_counts": lambda c, a: nerve_of(c).counts(),
    "euler": lambda c, a: euler_characteristic(realize(nerve_of(c))),
    "upper_clusters": lambda c, a: len(linked_clusters(upper_category(c, a)[0])),
    "upper_proper_objects": lambda c, a: len(upper_category(c, a)[0].proper_objects()),
    "upper_hasse_cycle": lambda c, a: hasse_cycle_length(upper_category(c, a)[0]),
    "lower_clusters": lambda c, a: len(linked_clusters(lower_category(c, a)[0])),
    "lower_proper_objects": lambda c, a: len(lower_category(c, a)[0].proper_objects()),
    "upper_categories_opposite": lambda c, a: (
        "iso" if is_isomorphic(category_of_upper_categories(c)[0], opposite(c)) else "not iso"),
}

PROPERTIES = tuple(sorted(_PROPS))


def evaluate(spec: FixtureSpec, c: Optional[Category] = None) -> list[Outcome]:
    c = c if c is not None else spec.build()
    out = []
    for e in spec.expectations:
        if e.prop not in _PROPS:
            raise UnknownNameError(f"unknown property {e.prop!r}")
        out.append(Outcome(e, _PROPS[e.prop](c, e.arg)))
    return out
