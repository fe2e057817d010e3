"""Presentations of the worked examples, with their expected properties.

Sign conventions: every point is positive, and rank-one signs follow a
cellular boundary with d∘d = 0, so the diamond sign rule holds wherever a
rank-two morphism has two factorizations through signed morphisms.  Cubes use
the cubical boundary: removing the i-th free coordinate towards 1 gives sign
(-1)^k and towards 0 gives -(-1)^k, with k the number of free coordinates
before i.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .category import Category, PreconditionError, Presentation, UnknownNameError, build_category

POS, NEG = 1, -1


@dataclass(frozen=True)
class Expectation:
    prop: str
    expected: Any
    arg: Optional[str] = None
    basis: str = "enumeration"   # how the expected value was obtained


@dataclass
class FixtureSpec:
    name: str
    presentation: Presentation
    expectations: list[Expectation] = field(default_factory=list)
    cw: Optional[bool] = None

    def build(self) -> Category:
        return build_category(self.presentation)


# -- presentations -----------------------------------------------------------


def signed_point() -> Presentation:
    return Presentation().object("P", 0, POS)


def segment() -> Presentation:
    return (Presentation()
            .object("A", 0, POS).object("B", 0, POS).object("L", 1)
            .arrow("l", "A", "L", POS).arrow("r", "B", "L", NEG))


def ray() -> Presentation:
    return Presentation().object("A", 0, POS).object("R", 1).arrow("a", "A", "R", NEG)


def ngon(k: int = 4) -> Presentation:
    """Polygon with k vertices v_i; edge e_i runs from v_i to v_{i+1}."""
    if k < 2:
        raise PreconditionError("ngon needs at least two vertices")
    p = Presentation(posetal=True)
    for i in range(k):
        p.object(f"v{i}", 0, POS)
    for i in range(k):
        p.object(f"e{i}", 1)
    p.object("F", 2)
    for i in range(k):
        p.arrow(f"s{i}", f"v{i}", f"e{i}", NEG)
        p.arrow(f"t{i}", f"v{(i + 1) % k}", f"e{i}", POS)
        p.arrow(f"f{i}", f"e{i}", "F", POS)
    return p


def circle_point() -> Presentation:
    return (Presentation()
            .object("P", 0, POS).object("C", 1)
            .arrow("cw", "P", "C", POS).arrow("ccw", "P", "C", NEG))


def crescent() -> Presentation:
    """Outer and inner circle tangent at P, with the crescent face S between them."""
    return (Presentation()
            .object("P", 0, POS).object("Cout", 1).object("Cin", 1).object("S", 2)
            .arrow("lo", "P", "Cout", POS).arrow("ro", "P", "Cout", NEG)
            .arrow("li", "P", "Cin", POS).arrow("ri", "P", "Cin", NEG)
            .arrow("s", "Cout", "S", POS).arrow("si", "Cin", "S", NEG)
            .equal("lo.s", "li.si")
            .equal("ro.s", "ri.si"))


def cube_faces(dim: int = 3) -> list[str]:
    return ["".join(w) for w in itertools.product("01x", repeat=dim)]


def _cube_boundary(face: str) -> list[tuple[str, int]]:
    out = []
    free = 0
    for i, ch in enumerate(face):
        if ch != "x":
            continue
        for b, base in (("1", 1), ("0", -1)):
            sub = face[:i] + b + face[i + 1:]
            sign = base * (-1) ** free
            out.append((sub, sign))
        free += 1
    return out


def _add_cube(p: Presentation, name: Callable[[str], str], seen: set[str], dim: int = 3) -> None:
    faces = sorted(cube_faces(dim), key=lambda f: (f.count("x"), f))
    for f in faces:
        n = name(f)
        if n in seen:
            continue
        seen.add(n)
        p.object(n, f.count("x"), POS if "x" not in f else None)
    for f in faces:
        for sub, sign in _cube_boundary(f):
            a = f"{name(sub)}_{name(f)}"
            if a in seen:
                continue
            seen.add(a)
            p.arrow(a, name(sub), name(f), sign)


def cube(dim: int = 3) -> Presentation:
    """Face lattice of the dim-cube; faces named c<word> over {0,1,x}."""
    p = Presentation(posetal=True)
    _add_cube(p, lambda f: "c" + f, set(), dim)
    return p


def two_cubes_shared_edge() -> Presentation:
    """Cubes a and b glued along their edge x00 (and its vertices 000, 100)."""
    shared = {"x00", "000", "100"}
    p = Presentation(posetal=True)
    seen: set[str] = set()
    _add_cube(p, lambda f: ("s" if f in shared else "a") + f, seen)
    _add_cube(p, lambda f: ("s" if f in shared else "b") + f, seen)
    return p


def annulus() -> Presentation:
    """A face F bounded by two circles, each carrying one vertex."""
    return (Presentation()
            .object("Po", 0, POS).object("Pi", 0, POS)
            .object("Co", 1).object("Ci", 1).object("F", 2)
            .arrow("lo", "Po", "Co", POS).arrow("ro", "Po", "Co", NEG)
            .arrow("li", "Pi", "Ci", POS).arrow("ri", "Pi", "Ci", NEG)
            .arrow("so", "Co", "F", POS).arrow("si", "Ci", "F", NEG)
            .equal("lo.so", "ro.so")
            .equal("li.si", "ri.si"))


def sphere_meridian() -> Presentation:
    """Sphere S cut along one meridian M from pole Sp to pole N; S covers M twice."""
    return (Presentation()
            .object("N", 0, POS).object("Sp", 0, POS).object("M", 1).object("S", 2)
            .arrow("n", "N", "M", POS).arrow("sp", "Sp", "M", NEG)
            .arrow("m1", "M", "S", POS).arrow("m2", "M", "S", NEG)
            .equal("n.m1", "n.m2")
            .equal("sp.m1", "sp.m2"))


def torus() -> Presentation:
    """Square with opposite sides identified: one vertex P, loops a and b, face Q.

    a0/a1 are the start/end of a, b0/b1 of b; the face sees a along its bottom
    and top sides and b along its left and right sides.
    """
    return (Presentation()
            .object("P", 0, POS).object("a", 1).object("b", 1).object("Q", 2)
            .arrow("a0", "P", "a", NEG).arrow("a1", "P", "a", POS)
            .arrow("b0", "P", "b", NEG).arrow("b1", "P", "b", POS)
            .arrow("qa_bot", "a", "Q", POS).arrow("qa_top", "a", "Q", NEG)
            .arrow("qb_left", "b", "Q", NEG).arrow("qb_right", "b", "Q", POS)
            .equal("a0.qa_bot", "b0.qb_left")
            .equal("a1.qa_bot", "b0.qb_right")
            .equal("a0.qa_top", "b1.qb_left")
            .equal("a1.qa_top", "b1.qb_right"))


def cone() -> Presentation:
    """Apex A and a vertexless base circle C bounding the surface S.

    The apex is removed from the coordinate range, so it is a direct
    subfacet of S with no edge in between.
    """
    return (Presentation()
            .object("A", 0, POS).object("C", 1).object("S", 2)
            .arrow("c", "C", "S", POS)
            .arrow("apex", "A", "S"))


def empty() -> Presentation:
    return Presentation()


# -- catalog -----------------------------------------------------------------

E = Expectation

_CATALOG: dict[str, Callable[..., FixtureSpec]] = {}


def _register(fn: Callable[..., FixtureSpec]) -> Callable[..., FixtureSpec]:
    _CATALOG[fn.__name__.removeprefix("_spec_")] = fn
    return fn


_BASE = [
    E("bounded_acyclic", "pass", basis="construction"),
    E("graded", "pass", basis="construction"),
    E("semi_diamond", "pass", basis="enumeration"),
]


@_register
def _spec_signed_point() -> FixtureSpec:
    return FixtureSpec("signed_point", signed_point(), _BASE + [
        E("objects", 3), E("morphisms", 6),
        E("nerve_counts", [1, 0]),
    ], cw=True)


@_register
def _spec_segment() -> FixtureSpec:
    return FixtureSpec("segment", segment(), _BASE + [
        E("objects", 5), E("morphisms", 14),
        E("diamond_all", "fail"),
        E("factorizations", 2, arg="null->L", basis="geometry"),
        E("nerve_counts", [3, 2, 0]),
        E("euler", 1),
        E("cw", "pass"),
    ], cw=True)


@_register
def _spec_ray() -> FixtureSpec:
    return FixtureSpec("ray", ray(), _BASE + [
        E("objects", 4), E("factorizations", 1, arg="null->R", basis="geometry"),
        E("diamond_all", "fail", basis="geometry"),
        # the proper-scope diamond exempts null -> R, so only diamond_all sees the open end
        E("cw", "pass"),
    ], cw=None)


@_register
def _spec_ngon(k: int = 4) -> FixtureSpec:
    return FixtureSpec(f"ngon({k})" if k != 4 else "ngon", ngon(k), _BASE + [
        E("objects", 2 * k + 3),
        E("diamond", "pass"),
        E("euler", 1),
        E("cw", "pass"),
    ], cw=True)


@_register
def _spec_circle_point() -> FixtureSpec:
    return FixtureSpec("circle_point", circle_point(), _BASE + [
        E("objects", 4), E("morphisms", 11),
        E("hom", 2, arg="P,C", basis="geometry"),
        E("hom", 1, arg="null,C"),
        E("hasse_edges", 2, arg="P,C", basis="geometry"),
        E("factorizations", 2, arg="null->C", basis="geometry"),
        E("diamond", "pass"),
    ], cw=True)


@_register
def _spec_crescent() -> FixtureSpec:
    return FixtureSpec("crescent", crescent(), _BASE + [
        E("objects", 6),
        E("hom", 2, arg="P,S", basis="geometry"),
        E("clusters", 1),
        E("upper_proper_objects", 6, arg="P"),
        E("upper_clusters", 2, arg="P", basis="geometry"),
        E("diamond", "pass"),
        E("cw", "pass"),
    ], cw=True)


@_register
def _spec_cube() -> FixtureSpec:
    return FixtureSpec("cube", cube(), _BASE + [
        E("objects", 29),
        E("diamond", "pass", basis="geometry"),
        E("diamond_all", "fail"),
        E("strongly_decomposable", "pass"),
        E("strongly_unsplittable", "pass"),
        E("strongly_initial_unsplittable", "pass"),
        E("upper_proper_objects", 7, arg="c000", basis="geometry"),
        E("euler", 1),
        E("cw", "pass"),
    ], cw=True)


@_register
def _spec_two_cubes_shared_edge() -> FixtureSpec:
    return FixtureSpec("two_cubes_shared_edge", two_cubes_shared_edge(), _BASE + [
        E("objects", 53),
        E("strongly_unsplittable", "fail", basis="geometry"),
        E("strongly_initial_unsplittable", "pass", basis="geometry"),
        E("upper_clusters", 2, arg="sx00", basis="geometry"),
        E("cw", "pass"),
    ], cw=True)


@_register
def _spec_annulus() -> FixtureSpec:
    return FixtureSpec("annulus", annulus(), _BASE + [
        E("objects", 7),
        E("diamond", "pass"),
        E("lower_clusters", 2, arg="F", basis="geometry"),
        E("strongly_initial_unsplittable", "fail", basis="geometry"),
        E("cw", "fail", basis="geometry"),
    ], cw=False)


@_register
def _spec_sphere_meridian() -> FixtureSpec:
    return FixtureSpec("sphere_meridian", sphere_meridian(), _BASE + [
        E("objects", 6),
        E("hom", 2, arg="M,S", basis="geometry"),
        E("lower_proper_objects", 4, arg="S", basis="geometry"),
        E("diamond", "pass"),
        E("euler", 2),
        E("cw", "pass"),
    ], cw=True)


@_register
def _spec_torus() -> FixtureSpec:
    return FixtureSpec("torus", torus(), _BASE + [
        E("objects", 6),
        E("hom", 4, arg="P,Q"),
        E("hasse_edges", 0, arg="P,Q"),
        E("upper_proper_objects", 8, arg="P"),
        E("upper_hasse_cycle", 8, arg="P", basis="geometry"),
        E("nerve_counts", [4, 12, 8, 0]),
        E("euler", 0),
        E("diamond", "pass"),
        E("cw", "pass", basis="geometry"),
    ], cw=True)


@_register
def _spec_cone() -> FixtureSpec:
    return FixtureSpec("cone", cone(), _BASE + [
        E("objects", 5),
        E("strongly_decomposable", "fail"),
        E("cw", "fail"),
        E("upper_categories_opposite", "iso", basis="geometry"),
    ], cw=False)


CATALOG = ("signed_point", "segment", "ray", "ngon", "circle_point", "crescent", "cube",
           "two_cubes_shared_edge", "annulus", "sphere_meridian", "torus", "cone")


def fixture(name: str, **params: Any) -> FixtureSpec:
    try:
        make = _CATALOG[name]
    except KeyError:
        raise UnknownNameError(f"unknown fixture {name!r}; choose from {', '.join(CATALOG)}") from None
    return make(**params)


def all_fixtures() -> list[FixtureSpec]:
    return [fixture(n) for n in CATALOG]
