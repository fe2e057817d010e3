import pytest

from incidence.category import PreconditionError, UnknownNameError, build_category
from incidence.expectations import PROPERTIES, evaluate
from incidence.fixtures import CATALOG, all_fixtures, fixture, ngon
from incidence.nerve import nerve_of
from oracles import PathQuotient, brute_chain_count

CASES = [(spec.name, k) for spec in all_fixtures() for k in range(len(spec.expectations))]


@pytest.mark.parametrize("name, k", CASES)
def test_expectation(name, k):
    spec = fixture(name)
    e = spec.expectations[k]
    outcome = evaluate(spec)[k]
    assert outcome.ok, f"{name}: {e.prop}({e.arg}) expected {e.expected!r}, got {outcome.actual!r}"


def test_expectations_use_known_properties():
    for spec in all_fixtures():
        for e in spec.expectations:
            assert e.prop in PROPERTIES


@pytest.mark.parametrize("name", CATALOG)
def test_frozen_counts_confirmed_by_oracle(name):
    """Counts pinned in the tables agree with exhaustive enumeration."""
    spec = fixture(name)
    c = spec.build()
    q = PathQuotient(spec.presentation)
    for e in spec.expectations:
        if e.prop == "objects":
            assert len(q.ranks) == e.expected
        elif e.prop == "morphisms":
            assert q.n_morphisms() == e.expected
        elif e.prop == "nerve_counts" and c.n_morphisms < 40:
            brute = [brute_chain_count(c, c.top_morphism, n) for n in range(1, len(e.expected) + 1)]
            assert brute == e.expected


def test_fixtures_are_deterministic():
    for name in CATALOG:
        assert fixture(name).presentation == fixture(name).presentation


def test_unknown_fixture():
    with pytest.raises(UnknownNameError):
        fixture("dodecahedron")


def test_ngon_parameter():
    c = fixture("ngon", k=6).build()
    assert c.n_objects == 15
    assert nerve_of(c).counts()[:3] == [13, 24, 12]
    with pytest.raises(PreconditionError):
        ngon(1)
    assert build_category(ngon(2)).n_objects == 7


def test_crescent_shape():
    p = fixture("crescent").presentation
    pts = [a for a in p.arrows if a.source == "P"]
    assert len(pts) == 4 and len(p.arrows) == 6 and len(p.relations) == 2


def test_torus_shape():
    p = fixture("torus").presentation
    ranks = sorted(o.rank for o in p.objects)
    assert ranks == [0, 1, 1, 2] and len(p.relations) == 4
