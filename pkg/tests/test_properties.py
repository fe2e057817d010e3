"""Property tests on random layered presentations."""
from hypothesis import given, settings

from incidence.axioms import (
    check_category_laws,
    check_cw,
    check_diamond,
    check_graded,
    check_semi_diamond,
    is_splittable,
    split,
    validate_bounded_acyclic,
)
from incidence.category import build_category, check_functor, opposite
from incidence.constructions import (
    check_local_embedding,
    lower_category,
    reduced_downward_functor,
    section_category,
    upper_category,
)
from incidence.iso import is_isomorphic
from incidence.nerve import boundary_squared_is_zero, check_simplicial_identities, nerve_of, realize
from incidence.textformat import dump_category, parse_category
from oracles import PathQuotient, brute_factorization_counts
from strategies import multigraph_presentations, thin_presentations

PRESENTATIONS = thin_presentations | multigraph_presentations


@given(PRESENTATIONS)
def test_build_satisfies_axioms(p):
    c = build_category(p)
    assert validate_bounded_acyclic(c).passed
    assert check_category_laws(c).passed
    assert check_graded(c).passed


@given(PRESENTATIONS)
def test_build_agrees_with_path_oracle(p):
    c = build_category(p)
    q = PathQuotient(p)
    assert c.n_morphisms == q.n_morphisms()
    assert [len(c.factorizations(m)) for m in c.morphisms] == brute_factorization_counts(c)


@given(PRESENTATIONS)
def test_text_round_trip(p):
    c = build_category(p)
    again = parse_category(dump_category(c))
    assert is_isomorphic(c, again, ranks=True)
    assert dump_category(again) == dump_category(parse_category(dump_category(again)))


@given(PRESENTATIONS)
def test_opposite_is_involution(p):
    c = build_category(p)
    op = opposite(c)
    assert validate_bounded_acyclic(op).passed
    assert is_isomorphic(opposite(op), c, ranks=True)


@settings(max_examples=30)
@given(PRESENTATIONS)
def test_constructions_compose(p):
    c = build_category(p)
    for x in c.objects:
        up, down = upper_category(c, x)
        assert validate_bounded_acyclic(up).passed
        assert check_local_embedding(down).passed
        assert is_isomorphic(section_category(c, c.terminal_morphism(x)), up)
        assert is_isomorphic(section_category(c, c.initial_morphism(x)), lower_category(c, x)[0])
    for m in c.morphisms:
        F = reduced_downward_functor(c, m)
        check_functor(F)
        assert check_local_embedding(F).passed


@settings(max_examples=30)
@given(PRESENTATIONS)
def test_nerve_is_simplicial(p):
    c = build_category(p)
    nv = nerve_of(c)
    assert len(nv.levels[0]) == 1
    assert check_simplicial_identities(nv).passed
    assert boundary_squared_is_zero(realize(nv)).passed


@given(PRESENTATIONS)
def test_diamond_implies_semi_diamond(p):
    c = build_category(p)
    for scope in ("proper", "all"):
        if check_diamond(c, scope, signs=True).passed:
            assert check_semi_diamond(c, signs=True).passed


@given(PRESENTATIONS)
def test_validators_are_deterministic(p):
    c = build_category(p)
    assert check_cw(c).to_dict() == check_cw(c).to_dict()


@given(PRESENTATIONS)
def test_unsplittable_split_is_identity(p):
    c = build_category(p)
    ok, clusters = is_splittable(c)
    parts = split(c)
    if not ok:
        assert len(parts) == 1 and is_isomorphic(parts[0], c)
    else:
        assert len(parts) == len(clusters)
        assert all(validate_bounded_acyclic(part).passed for part in parts)
