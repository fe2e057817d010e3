"""Validators for the axioms and structural properties of bounded acyclic categories.

Every validator is a pure scan returning a ValidationReport; witnesses are
listed in morphism (or object) id order.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Callable, Optional

from .category import Category, UnsignedError, _UnionFind, full_subcategory
from .constructions import section_category
from .report import FAIL, NA, PASS, ValidationReport, Witness

SCOPES = ("proper", "all")


def _obj(c: Category, x: int, text: str) -> Witness:
    return Witness("object", (x,), f"{c.object_names[x]}: {text}")


def _mor(c: Category, m: int, text: str) -> Witness:
    return Witness("morphism", (m,), f"{c.describe(m)}: {text}")


def validate_bounded_acyclic(c: Category) -> ValidationReport:
    """Irreflexivity, asymmetry, transitivity, initial and terminal objects.

    Works from the raw tables only, so hand-assembled categories with missing
    composites are reported rather than raising.
    """
    ids = set(c.identities)
    ws: list[Witness] = []
    between: dict[tuple[int, int], list[int]] = defaultdict(list)
    for m in c.morphisms:
        between[(c.sources[m], c.targets[m])].append(m)
        if m not in ids and c.sources[m] == c.targets[m]:
            ws.append(_mor(c, m, "irreflexivity: non-identity endomorphism"))
    for (x, y), ms in sorted(between.items()):
        if x < y and (y, x) in between:
            ws.append(_mor(c, ms[0], f"asymmetry: {c.names[between[(y, x)][0]]} goes back"))
    outs: dict[int, list[int]] = defaultdict(list)
    for m in c.morphisms:
        outs[c.sources[m]].append(m)
    for f in c.morphisms:
        for g in outs[c.targets[f]]:
            h = c.table.get((g, f))
            if h is None:
                ws.append(_mor(c, f, f"transitivity: no composite {c.names[g]}∘{c.names[f]}"))
            elif c.sources[h] != c.sources[f] or c.targets[h] != c.targets[g]:
                ws.append(_mor(c, f, f"transitivity: {c.names[g]}∘{c.names[f]} has wrong endpoints"))
    for which, bound in (("initial", c.initial), ("terminal", c.terminal)):
        if bound is None:
            ws.append(Witness("object", (), f"{which}: no {which} object"))
            continue
        for x in c.objects:
            n = len(between.get((bound, x) if which == "initial" else (x, bound), []))
            if n != 1:
                ws.append(_obj(c, x, f"{which}: {n} morphisms {'from' if which == 'initial' else 'to'} "
                                     f"{c.object_names[bound]}"))
    return ValidationReport.of("bounded_acyclic", ws)


def check_category_laws(c: Category) -> ValidationReport:
    """Identity laws and associativity of the composition table."""
    ws: list[Witness] = []
    for m in c.morphisms:
        if c.table.get((c.identities[c.targets[m]], m)) != m or c.table.get((m, c.identities[c.sources[m]])) != m:
            ws.append(_mor(c, m, "identity law"))
    outs: dict[int, list[int]] = defaultdict(list)
    for m in c.morphisms:
        outs[c.sources[m]].append(m)
    for f in c.morphisms:
        for g in outs[c.targets[f]]:
            gf = c.table.get((g, f))
            if gf is None:
                continue
            for h in outs[c.targets[g]]:
                hg = c.table.get((h, g))
                if hg is not None and c.table.get((h, gf)) != c.table.get((hg, f)):
                    ws.append(_mor(c, f, f"associativity with {c.names[g]}, {c.names[h]}"))
    return ValidationReport.of("category_laws", ws)


def check_graded(c: Category) -> ValidationReport:
    ws = [_mor(c, m, "does not increase rank") for m in c.morphisms
          if not c.is_identity(m) and c.rank_diff(m) <= 0]
    return ValidationReport.of("graded", ws)


def _points(c: Category) -> list[int]:
    """Objects one rank above the initial object."""
    if c.initial is None:
        return []
    r = c.ranks[c.initial] + 1
    return [x for x in c.proper_objects() if c.ranks[x] == r]


def unsigned_points(c: Category) -> list[int]:
    return [x for x in _points(c) if c.point_sign(x) is None]


def require_point_signs(c: Category) -> None:
    missing = unsigned_points(c)
    if missing:
        names = ", ".join(c.object_names[x] for x in missing)
        raise UnsignedError(f"sign checks need signed points; unsigned: {names}")


def _sign(c: Category, m: int) -> Optional[int]:
    s = c.signs[m]
    if s is None and c.sources[m] == c.initial and c.rank_diff(m) == 1:
        s = c.point_sign(c.targets[m])
    return s


def _diamond_scan(c: Category, prop: str, exact: Callable[[int], bool], signs: bool) -> ValidationReport:
    if signs:
        require_point_signs(c)
    ws: list[Witness] = []
    notes: list[str] = []
    for m in c.morphisms:
        if c.rank_diff(m) != 2:
            continue
        facs = c.factorizations(m)
        n = len(facs)
        need_exact = exact(m)
        if n > 2 or (need_exact and n != 2):
            want = "exactly 2" if need_exact else "at most 2"
            ws.append(_mor(c, m, f"{n} factorizations, expected {want}"))
            continue
        if not signs or n != 2:
            continue
        prods = []
        for f, g in facs:
            sf, sg = _sign(c, f), _sign(c, g)
            if sf is None or sg is None:
                break
            prods.append(sf * sg)
        if len(prods) < 2:
            notes.append(f"unsigned: {c.describe(m)} has an unsigned factor, sign rule skipped")
        elif prods[0] != -prods[1]:
            ws.append(_mor(c, m, "sign rule: both factorizations have product "
                                 f"{'+' if prods[0] > 0 else '-'}"))
    return ValidationReport.of(prop, ws, notes)


def check_semi_diamond(c: Category, signs: bool = False) -> ValidationReport:
    return _diamond_scan(c, "semi_diamond", lambda m: False, signs)


def check_diamond(c: Category, scope: str = "proper", signs: bool = False) -> ValidationReport:
    """Exactly two factorizations per rank-2 morphism in scope.

    With the proper scope, morphisms out of the initial or into the terminal
    object only need the semi-diamond bound.
    """
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    if scope == "all":
        return _diamond_scan(c, "diamond_all", lambda m: True, signs)

    def exact(m: int) -> bool:
        return c.sources[m] != c.initial and c.targets[m] != c.terminal

    return _diamond_scan(c, "diamond", exact, signs)


def check_strongly_decomposable(c: Category) -> ValidationReport:
    """Every non-identity morphism not into the terminal object is a chain of rank-1 morphisms."""
    chained = [False] * c.n_morphisms
    order = sorted((m for m in c.morphisms if not c.is_identity(m)), key=c.rank_diff)
    for m in order:
        chained[m] = c.rank_diff(m) == 1 or any(
            c.rank_diff(f) == 1 and chained[g] for f, g in c.factorizations(m))
    ws = [_mor(c, m, "not a composite of rank-1 morphisms") for m in c.morphisms
          if not c.is_identity(m) and c.targets[m] != c.terminal and not chained[m]]
    return ValidationReport.of("strongly_decomposable", ws)


def linked_clusters(c: Category) -> list[list[int]]:
    """Connected components of the Hasse diagram restricted to proper objects."""
    proper = c.proper_objects()
    index = {x: i for i, x in enumerate(proper)}
    uf = _UnionFind(len(proper))
    for m in c.nondecomposable:
        s, t = c.sources[m], c.targets[m]
        if s in index and t in index:
            uf.union(index[s], index[t])
    groups: dict[int, list[int]] = defaultdict(list)
    for x in proper:
        groups[uf.find(index[x])].append(x)
    return sorted(groups.values(), key=lambda g: g[0])


def is_splittable(c: Category) -> tuple[bool, list[list[int]]]:
    clusters = linked_clusters(c)
    return len(clusters) >= 2, clusters


def split(c: Category) -> list[Category]:
    """One bounded category per linked cluster, each keeping the original bounds."""
    clusters = linked_clusters(c)
    if len(clusters) < 2:
        return [c]
    bounds = [x for x in (c.initial, c.terminal) if x is not None]
    return [full_subcategory(c, cl + bounds) for cl in clusters]


def _high(c: Category) -> list[int]:
    return [m for m in c.morphisms if not c.is_identity(m) and c.rank_diff(m) > 2]


def check_strongly_unsplittable(c: Category) -> ValidationReport:
    ws = []
    for m in _high(c):
        parts = linked_clusters(section_category(c, m))
        if len(parts) >= 2:
            ws.append(_mor(c, m, f"section splits into {len(parts)} parts"))
    return ValidationReport.of("strongly_unsplittable", ws)


def _siu_witnesses(c: Category, memo: dict[str, bool]) -> list[Witness]:
    ws = []
    for m in _high(c):
        sec = section_category(c, m)
        if c.sources[m] == c.initial:
            parts = linked_clusters(sec)
            if len(parts) >= 2:
                ws.append(_mor(c, m, f"section of initial morphism splits into {len(parts)} parts"))
            continue
        for k, part in enumerate(split(sec)):
            if not _siu_ok(part, memo):
                ws.append(_mor(c, m, f"part {k} of the section is not strongly initial unsplittable"))
                break
    return ws


def _siu_ok(c: Category, memo: dict[str, bool]) -> bool:
    from .textformat import dump_category

    key = dump_category(c)
    if key not in memo:
        memo[key] = not _siu_witnesses(c, memo)
    return memo[key]


def check_strongly_initial_unsplittable(c: Category) -> ValidationReport:
    """Sections of initial morphisms are unsplittable; other sections split into such parts, recursively."""
    return ValidationReport.of("strongly_initial_unsplittable", _siu_witnesses(c, {}))


def check_cw(c: Category) -> ValidationReport:
    """Diamond (proper scope) + strongly decomposable + strongly initial unsplittable.

    The sign rule is checked when every point carries a sign.
    """
    signs = not unsigned_points(c)
    parts = [
        check_diamond(c, "proper", signs),
        check_strongly_decomposable(c),
        check_strongly_initial_unsplittable(c),
    ]
    ws = [w for p in parts for w in p.witnesses]
    notes = [] if signs else ["sign rule not checked: some points are unsigned"]
    return ValidationReport.of("cw", ws, notes, parts)


def not_applicable(prop: str, reason: str) -> ValidationReport:
    return ValidationReport(prop, NA, notes=[reason])


__all__ = [
    "FAIL", "NA", "PASS", "SCOPES",
    "check_category_laws", "check_cw", "check_diamond", "check_graded", "check_semi_diamond",
    "check_strongly_decomposable", "check_strongly_initial_unsplittable",
    "check_strongly_unsplittable", "is_splittable", "linked_clusters", "not_applicable",
    "require_point_signs", "split", "unsigned_points", "validate_bounded_acyclic",
]
