"""Upper, lower and section categories, downward functors, local embeddings.

Derived objects are named ``base|mark`` after their underlying host object
and marking morphism; section objects carry both halves of the
factorization, ``base|first,second``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Optional

from .category import (
    Category,
    CompositionError,
    Functor,
    UnknownNameError,
    assemble,
    check_functor,
    opposite,
)
from .report import ValidationReport, Witness


@dataclass(frozen=True)
class MarkedObject:
    """A derived object: its host base object and its mark.

    The mark is φ_sm for upper objects, φ_mt for lower objects and the pair
    (φ, φ*) of a factorization φ*∘φ for section objects.
    """

    base: int
    mark: int | tuple[int, int]


@dataclass(frozen=True, eq=False)
class Derived:
    category: Category
    functor: Functor
    marks: tuple[MarkedObject, ...]
    object_index: dict[Hashable, int]
    morphism_index: dict[Hashable, int]


def _make(c: Category, obj_keys, obj_info, mor_keys, mor_info, identity, compose, initial, terminal,
          base_of, mark_of, under) -> Derived:
    oidx = {k: i for i, k in enumerate(obj_keys)}
    midx = {k: i for i, k in enumerate(mor_keys)}
    objects = [obj_info(k) for k in obj_keys]
    morphisms = []
    for k in mor_keys:
        name, s, t, sign = mor_info(k)
        morphisms.append((name, oidx[s], oidx[t], sign))
    cat = assemble(
        objects, morphisms,
        identities=[midx[identity(k)] for k in obj_keys],
        compose=lambda g, f: midx[compose(mor_keys[g], mor_keys[f])],
        initial=oidx.get(initial) if initial is not None else None,
        terminal=oidx.get(terminal) if terminal is not None else None,
    )
    functor = Functor(cat, c, tuple(base_of(k) for k in obj_keys), tuple(under(k) for k in mor_keys))
    marks = tuple(MarkedObject(base_of(k), mark_of(k)) for k in obj_keys)
    return Derived(cat, functor, marks, oidx, midx)


def _inherited_sign(c: Category, m: int) -> Optional[int]:
    return c.signs[m] if c.rank_diff(m) == 1 else None


@lru_cache(maxsize=2048)
def _upper(c: Category, m: int, normalize: bool) -> Derived:
    shift = c.ranks[m] + 1 if normalize else 0
    ident = c.identities[m]
    obj_keys = [ident] + [f for f in c.out_morphisms(m) if f != ident]
    mor_keys = [(g, f) for f in obj_keys for g in c.out_morphisms(c.targets[f])]
    on, mn = c.object_names, c.names
    terminal = c.terminal_morphism(m) if c.terminal is not None else None

    def mor_info(k):
        g, f = k
        return (f"{mn[g]}|{mn[f]}", f, c.compose(g, f), _inherited_sign(c, g))

    return _make(
        c, obj_keys,
        obj_info=lambda f: (f"{on[c.targets[f]]}|{mn[f]}", c.ranks[c.targets[f]] - shift, None),
        mor_keys=mor_keys, mor_info=mor_info,
        identity=lambda f: (c.identities[c.targets[f]], f),
        compose=lambda gk, fk: (c.compose(gk[0], fk[0]), fk[1]),
        initial=ident, terminal=terminal,
        base_of=lambda f: c.targets[f], mark_of=lambda f: f, under=lambda k: k[0],
    )


def upper_derived(c: Category, obj: int | str, normalize: bool = True) -> Derived:
    return _upper(c, c.object_id(obj), normalize)


def upper_category(c: Category, obj: int | str, normalize: bool = True) -> tuple[Category, Functor]:
    """Objects F_s|φ_sm for every φ_sm out of the anchor; returns the downward functor too."""
    d = upper_derived(c, obj, normalize)
    return d.category, d.functor


@lru_cache(maxsize=2048)
def _lower(c: Category, m: int) -> Derived:
    ins = c.in_morphisms(m)
    mor_keys = [(a, g) for a in ins for g in c.in_morphisms(c.sources[a])]
    on, mn = c.object_names, c.names
    initial = c.initial_morphism(m) if c.initial is not None else None

    def mor_info(k):
        a, g = k
        return (f"{mn[g]}|{mn[a]}", c.compose(a, g), a, _inherited_sign(c, g))

    return _make(
        c, ins,
        obj_info=lambda a: (f"{on[c.sources[a]]}|{mn[a]}", c.ranks[c.sources[a]], None),
        mor_keys=mor_keys, mor_info=mor_info,
        identity=lambda a: (a, c.identities[c.sources[a]]),
        compose=lambda gk, fk: (gk[0], c.compose(gk[1], fk[1])),
        initial=initial, terminal=c.identities[m],
        base_of=lambda a: c.sources[a], mark_of=lambda a: a, under=lambda k: k[1],
    )


def lower_derived(c: Category, obj: int | str) -> Derived:
    return _lower(c, c.object_id(obj))


def lower_category(c: Category, obj: int | str) -> tuple[Category, Functor]:
    """Objects ⟨φ_mt|F_t for every φ_mt into the anchor; ranks are not shifted."""
    d = lower_derived(c, obj)
    return d.category, d.functor


@lru_cache(maxsize=4096)
def _section(c: Category, phi: int, normalize: bool) -> Derived:
    x, y = c.sources[phi], c.targets[phi]
    shift = c.ranks[x] + 1 if normalize else 0
    obj_keys = []   # (first, second) with second∘first = phi
    for b in c.out_morphisms(x):
        for a in c.hom(c.targets[b], y):
            if c.compose(a, b) == phi:
                obj_keys.append((b, a))
    mor_keys = []   # (b, m, a) with a∘m∘b = phi
    for b, a1 in obj_keys:
        for m in c.out_morphisms(c.targets[b]):
            for a in c.hom(c.targets[m], y):
                if c.compose(a, m) == a1:
                    mor_keys.append((b, m, a))
    on, mn = c.object_names, c.names

    def obj_info(k):
        b, a = k
        return (f"{on[c.targets[b]]}|{mn[b]},{mn[a]}", c.ranks[c.targets[b]] - shift, None)

    def mor_info(k):
        b, m, a = k
        return (f"{mn[m]}|{mn[b]},{mn[a]}", (b, c.compose(a, m)), (c.compose(m, b), a), _inherited_sign(c, m))

    return _make(
        c, obj_keys, obj_info, mor_keys, mor_info,
        identity=lambda k: (k[0], c.identities[c.targets[k[0]]], k[1]),
        compose=lambda gk, fk: (fk[0], c.compose(gk[1], fk[1]), gk[2]),
        initial=(c.identities[x], phi), terminal=(phi, c.identities[y]),
        base_of=lambda k: c.targets[k[0]], mark_of=lambda k: k, under=lambda k: k[1],
    )


def section_derived(c: Category, phi: int | str, normalize: bool = True) -> Derived:
    return _section(c, c.morphism_id(phi), normalize)


def section_category(c: Category, phi: int | str, normalize: bool = True) -> Category:
    """Factorizations of φ as objects, three-fold factorizations as morphisms."""
    return section_derived(c, phi, normalize).category


def reduced_downward_functor(c: Category, phi: int | str, normalize: bool = True) -> Functor:
    """For φ: F_n -> F_m, the functor upper(F_m) -> upper(F_n) precomposing marks with φ."""
    phi = c.morphism_id(phi)
    um = _upper(c, c.targets[phi], normalize)
    un = _upper(c, c.sources[phi], normalize)
    obj_map = tuple(un.object_index[c.compose(f, phi)] for f in (mk.mark for mk in um.marks))
    mor_map = []
    for k in range(um.category.n_morphisms):
        g = um.functor.morphism_map[k]
        f = um.marks[um.category.sources[k]].mark
        mor_map.append(un.morphism_index[(g, c.compose(f, phi))])
    return Functor(um.category, un.category, obj_map, tuple(mor_map))


def iterated_upper(c: Category, obj: int | str, marked: int | str | MarkedObject,
                   normalize: bool = True) -> Category:
    """Upper category of a marked object inside upper(c, obj)."""
    d = upper_derived(c, obj, normalize)
    if isinstance(marked, MarkedObject):
        if marked.mark not in d.object_index or d.marks[d.object_index[marked.mark]] != marked:
            raise UnknownNameError(f"{marked} is not an object of the upper category")
        marked = d.object_index[marked.mark]
    return upper_category(d.category, marked, normalize)[0]


def check_local_embedding(mu: Functor) -> ValidationReport:
    """Every factorization of every image morphism must lift uniquely."""
    check_functor(mu)
    a, b = mu.source, mu.target
    mm = mu.morphism_map
    witnesses = []
    for phi in a.morphisms:
        lifts: dict[tuple[int, int], int] = {}
        for f1, f2 in a.all_factorizations(phi):
            key = (mm[f1], mm[f2])
            lifts[key] = lifts.get(key, 0) + 1
        for p1, p2 in b.all_factorizations(mm[phi]):
            n = lifts.get((p1, p2), 0)
            if n != 1:
                witnesses.append(Witness(
                    "lift", (phi, p1, p2, n),
                    f"{a.names[phi]} -> {b.names[mm[phi]]}: factorization "
                    f"({b.names[p1]}, {b.names[p2]}) has {n} lifts"))
    return ValidationReport.of("local_embedding", witnesses)


def category_of_upper_categories(c: Category, normalize: bool = True) -> tuple[Category, Functor]:
    """Upper categories and reduced downward functors; returns the iso to opposite(c)."""
    if c.initial is None or c.terminal is None:
        raise CompositionError("category is not bounded")
    pivot = c.ranks[c.initial] + c.ranks[c.terminal]
    functors = [reduced_downward_functor(c, phi, normalize) for phi in c.morphisms]
    signature = {}
    for phi, F in enumerate(functors):
        key = (c.targets[phi], c.sources[phi], F.object_map, F.morphism_map)
        if key in signature:
            raise CompositionError(f"{c.names[phi]} and {c.names[signature[key]]} induce the same functor")
        signature[key] = phi

    def compose(g: int, f: int) -> int:
        # g∘f in the new category: first functors[f], then functors[g]
        F = functors[f].then(functors[g])
        return signature[(c.targets[f], c.sources[g], F.object_map, F.morphism_map)]

    objects = [(f"up_{n}", pivot - r, None) for n, r in zip(c.object_names, c.ranks)]
    morphisms = [(f"down_{c.names[phi]}", c.targets[phi], c.sources[phi], None) for phi in c.morphisms]
    cat = assemble(objects, morphisms, c.identities, compose, initial=c.terminal, terminal=c.initial)
    iso = Functor(cat, opposite(c), tuple(c.objects), tuple(c.morphisms))
    check_functor(iso)
    return cat, iso
