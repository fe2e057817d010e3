"""Acceptance criteria 1-11, one test each.

Every test records a PASS/FAIL line; conftest prints them at the end of the
run, and running this file directly prints them as well.
"""
import dataclasses
import os
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from incidence.axioms import (
    check_diamond,
    check_graded,
    check_semi_diamond,
    check_strongly_initial_unsplittable,
    check_strongly_unsplittable,
    linked_clusters,
    split,
    validate_bounded_acyclic,
)
from incidence.category import Functor, Presentation, build_category, check_functor, induced_poset, opposite
from incidence.constructions import (
    category_of_upper_categories,
    check_local_embedding,
    iterated_upper,
    lower_category,
    reduced_downward_functor,
    section_category,
    upper_category,
    upper_derived,
)
from incidence.expectations import hasse_cycle_length
from incidence.fixtures import CATALOG, fixture, ngon, segment
from incidence.iso import is_isomorphic
from incidence.nerve import (
    boundary_squared_is_zero,
    check_upper_via_nerve,
    euler_characteristic,
    nerve_of,
    realize,
)

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(n: int, text: str):
    try:
        yield
    except BaseException:
        RESULTS[n] = f"FAIL criterion {n}: {text}"
        raise
    RESULTS[n] = f"PASS criterion {n}: {text}"


def fresh(name: str):
    return fixture(name).build()


def proper_ranks(c):
    out: dict[int, int] = {}
    for x in c.proper_objects():
        out[c.ranks[x]] = out.get(c.ranks[x], 0) + 1
    return dict(sorted(out.items()))


def test_criterion_01_axiom_suite():
    with criterion(1, "all 12 fixtures are bounded acyclic, graded, semi-diamond with signs, < 1 s each"):
        assert len(CATALOG) == 12
        for name in CATALOG:
            start = time.perf_counter()
            c = fresh(name)
            for r in (validate_bounded_acyclic(c), check_graded(c), check_semi_diamond(c, signs=True)):
                assert r.passed, (name, r.render())
            assert time.perf_counter() - start < 1.0, name


def test_criterion_02_diamond_sign_rule():
    with criterion(2, "diamond sign rule holds; any single segment sign flip gives exactly one violation"):
        for name in ("segment", "circle_point", "crescent", "torus"):
            assert check_diamond(fresh(name), "proper", signs=True).passed, name
        p0 = segment()
        flippable = [o.name for o in p0.objects if o.sign] + [a.name for a in p0.arrows if a.sign]
        assert flippable
        for which in flippable:
            p = segment()
            p.objects = [dataclasses.replace(o, sign=-o.sign) if o.name == which else o for o in p.objects]
            p.arrows = [dataclasses.replace(a, sign=-a.sign) if a.name == which else a for a in p.arrows]
            r = check_diamond(build_category(p), "proper", signs=True)
            assert len(r.witnesses) == 1, which
            assert "sign rule" in r.witnesses[0].text


def test_criterion_03_cube_vertex_figure():
    with criterion(3, "every cube vertex figure is a 3+3+1 triangle face lattice, all 8 isomorphic"):
        c = fresh("cube")
        tri = build_category(ngon(3))
        vertices = [x for x in c.proper_objects() if c.ranks[x] == 0]
        assert len(vertices) == 8
        ups = [upper_category(c, v)[0] for v in vertices]
        tri_order = {(tri.object_names[a], tri.object_names[b]) for a, b in induced_poset(tri)}
        for up in ups:
            assert proper_ranks(up) == {0: 3, 1: 3, 2: 1}
            found = is_isomorphic(up, tri, ranks=True)
            assert found is not None
            omap = found[0].object_map
            assert {(tri.object_names[omap[a]], tri.object_names[omap[b]]) for a, b in induced_poset(up)} == tri_order
            assert is_isomorphic(up, ups[0], ranks=True)


def test_criterion_04_crescent_separation():
    with criterion(4, "upper(crescent, P) has 2 linked clusters and splits into isomorphic halves"):
        up, _ = upper_category(fresh("crescent"), "P")
        assert len(linked_clusters(up)) == 2
        parts = split(up)
        assert len(parts) == 2
        assert is_isomorphic(parts[0], parts[1], ranks=True)


def test_criterion_05_torus():
    with criterion(5, "torus vertex figure is an 8-cycle; realization (4,12,8), chi 0, boundary squared zero"):
        c = fresh("torus")
        up, _ = upper_category(c, "P")
        assert len(up.proper_objects()) == 8
        assert hasse_cycle_length(up) == 8
        oc = realize(nerve_of(c))
        assert oc.counts() == [4, 12, 8]
        assert euler_characteristic(oc) == 0
        assert boundary_squared_is_zero(oc).passed


def test_criterion_06_composability():
    with criterion(6, "iterated upper matches direct upper; sections of bound morphisms; sweep < 60 s"):
        start = time.perf_counter()
        for name in CATALOG:
            c = fresh(name)
            for x in c.objects:
                up = upper_category(c, x)[0]
                for k, mark in enumerate(upper_derived(c, x).marks):
                    assert is_isomorphic(iterated_upper(c, x, k), upper_category(c, mark.base)[0], ranks=True), \
                        (name, c.object_names[x], k)
                assert is_isomorphic(section_category(c, c.terminal_morphism(x)), up, ranks=True)
                assert is_isomorphic(section_category(c, c.initial_morphism(x)), lower_category(c, x)[0])
        assert time.perf_counter() - start < 60.0


def test_criterion_07_nerve_reconstruction():
    with criterion(7, "upper via nerve matches the nerve of the upper category for segment, cube, torus"):
        for name in ("segment", "cube", "torus"):
            c = fresh(name)
            nv = nerve_of(c)
            ones = nv.nondegenerate(1)
            assert ones
            for F in ones:
                assert check_upper_via_nerve(c, F, nv).passed, (name, F.render())


def test_criterion_08_local_embedding():
    with criterion(8, "downward and reduced downward functors are local embeddings; a collapsing functor is not"):
        for name in CATALOG:
            c = fresh(name)
            for x in c.objects:
                assert check_local_embedding(upper_category(c, x)[1]).passed, (name, x)
            for m in c.morphisms:
                assert check_local_embedding(reduced_downward_functor(c, m)).passed, (name, c.names[m])
        c = fresh("circle_point")
        t = build_category(Presentation(posetal=True).object("P", 0).object("C", 1).arrow("e", "P", "C"))
        omap = tuple(t.object_id(n) for n in c.object_names)
        mmap = tuple(t.hom(omap[c.sources[m]], omap[c.targets[m]])[0] for m in c.morphisms)
        collapse = Functor(c, t, omap, mmap)
        check_functor(collapse)
        assert check_local_embedding(collapse).verdict == "fail"


def test_criterion_09_cw_characterization():
    with criterion(9, "strong initial unsplittability of cube, torus, two cubes; shared edge and annulus flagged"):
        for name in ("cube", "torus", "two_cubes_shared_edge"):
            assert check_strongly_initial_unsplittable(fresh(name)).passed, name
        c = fresh("two_cubes_shared_edge")
        r = check_strongly_unsplittable(c)
        assert r.verdict == "fail"
        assert [(c.object_names[c.sources[w.ids[0]]], c.targets[w.ids[0]]) for w in r.witnesses] == \
            [("sx00", c.terminal)]
        assert check_strongly_initial_unsplittable(fresh("annulus")).verdict == "fail"


def test_criterion_10_opposite_duality():
    with criterion(10, "category of upper categories is isomorphic to the opposite for segment, cone, cube"):
        for name in ("segment", "cone", "cube"):
            c = fresh(name)
            uc, iso = category_of_upper_categories(c)
            check_functor(iso)
            assert is_isomorphic(uc, opposite(c), ranks=True), name


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    res = subprocess.run([sys.executable, "-m", "incidence", *args], capture_output=True, env=env)
    return res.returncode, res.stdout


def test_criterion_11_determinism(tmp_path):
    with criterion(11, "repeated CLI runs give byte-identical DOT and JSON output"):
        for name in ("segment", "torus", "crescent", "cube"):
            path = str(tmp_path / f"{name}.cat")
            code, text = _cli(["fixture", name], 0)
            assert code == 0
            with open(path, "wb") as fh:
                fh.write(text)
            for args in (["hasse", path], ["nerve", path], ["realize", path],
                         ["validate", path, "--format", "json", "--check", "cw"]):
                outs = {_cli(args, seed) for seed in (0, 7, 4242)}
                assert len(outs) == 1, args
                assert outs.pop()[1]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
