"""Isomorphism search between finite acyclic categories.

Backtracking over morphisms in topological order of their targets.  Only
nondecomposable morphisms branch; every decomposable one is forced by the
images of its factors and checked against all of its factorizations at once.
Candidates are tried in increasing id order, so the first hit is the
lexicographically smallest mapping in that order.
"""
from __future__ import annotations

from collections import Counter
from typing import Optional

from .category import Category, Functor


def _levels(c: Category) -> tuple[list[int], list[int]]:
    """Longest nondecomposable-path distance from below and to above, per object."""
    nd = c.nondecomposable
    up = [0] * c.n_objects
    down = [0] * c.n_objects
    for _ in range(c.n_objects):
        changed = False
        for m in nd:
            s, t = c.sources[m], c.targets[m]
            if up[t] < up[s] + 1:
                up[t] = up[s] + 1
                changed = True
            if down[s] < down[t] + 1:
                down[s] = down[t] + 1
                changed = True
        if not changed:
            break
    return up, down


def _invariants(c: Category, ranks: bool):
    up, down = _levels(c)
    nonid_in = [0] * c.n_objects
    nonid_out = [0] * c.n_objects
    nd_in = [0] * c.n_objects
    nd_out = [0] * c.n_objects
    ndset = set(c.nondecomposable)
    for m in c.morphisms:
        if c.is_identity(m):
            continue
        nonid_out[c.sources[m]] += 1
        nonid_in[c.targets[m]] += 1
        if m in ndset:
            nd_out[c.sources[m]] += 1
            nd_in[c.targets[m]] += 1
    obj = [(up[x], down[x], nonid_in[x], nonid_out[x], nd_in[x], nd_out[x],
            c.ranks[x] if ranks else 0) for x in c.objects]
    length = [0] * c.n_morphisms
    order = sorted((m for m in c.morphisms if not c.is_identity(m)),
                   key=lambda m: up[c.targets[m]] - up[c.sources[m]])
    for m in order:
        facs = c.factorizations(m)
        length[m] = 1 if not facs else 1 + max(max(length[f], length[g]) for f, g in facs)
    mor = [(c.is_identity(m), length[m], len(c.factorizations(m)),
            len(c.hom(c.sources[m], c.targets[m])), obj[c.sources[m]], obj[c.targets[m]])
           for m in c.morphisms]
    return up, obj, length, mor


def is_isomorphic(a: Category, b: Category, ranks: bool = False) -> Optional[tuple[Functor, Functor]]:
    """Return mutually inverse functors (a -> b, b -> a), or None.

    Ranks are extra data, not categorical structure; pass ``ranks=True`` to
    also require rank preservation.
    """
    if a.n_objects != b.n_objects or a.n_morphisms != b.n_morphisms or len(a.table) != len(b.table):
        return None
    up_a, obj_a, len_a, mor_a = _invariants(a, ranks)
    _, obj_b, _, mor_b = _invariants(b, ranks)
    if Counter(obj_a) != Counter(obj_b) or Counter(mor_a) != Counter(mor_b):
        return None

    steps = sorted((m for m in a.morphisms if not a.is_identity(m)),
                   key=lambda m: (up_a[a.targets[m]], a.targets[m], len_a[m], m))
    cand_by_inv: dict[tuple, list[int]] = {}
    for m in b.morphisms:
        cand_by_inv.setdefault(mor_b[m], []).append(m)

    objmap = [-1] * a.n_objects
    objinv = [-1] * b.n_objects
    mormap = [-1] * a.n_morphisms
    used = [False] * b.n_morphisms

    def bind_obj(x: int, y: int, undo: list[int]) -> bool:
        if objmap[x] == -1:
            if objinv[y] != -1 or obj_a[x] != obj_b[y]:
                return False
            objmap[x], objinv[y] = y, x
            undo.append(x)
            return True
        return objmap[x] == y

    def unbind(undo: list[int]) -> None:
        for x in undo:
            objinv[objmap[x]] = -1
            objmap[x] = -1

    def try_step(m: int, m2: int) -> Optional[list[int]]:
        if used[m2]:
            return None
        undo: list[int] = []
        if not (bind_obj(a.sources[m], b.sources[m2], undo) and bind_obj(a.targets[m], b.targets[m2], undo)):
            unbind(undo)
            return None
        mormap[m] = m2
        used[m2] = True
        return undo

    def release(m: int, undo: list[int]) -> None:
        used[mormap[m]] = False
        mormap[m] = -1
        unbind(undo)

    def candidates(m: int) -> list[int]:
        facs = a.factorizations(m)
        if not facs:
            return cand_by_inv.get(mor_a[m], [])
        f, g = facs[0]
        image = b.table.get((mormap[g], mormap[f]))
        if image is None or mor_b[image] != mor_a[m]:
            return []
        for f2, g2 in facs[1:]:
            if b.table.get((mormap[g2], mormap[f2])) != image:
                return []
        return [image]

    # iterative depth-first search; frames are (candidate list, position, undo)
    stack: list[tuple[list[int], int, Optional[list[int]]]] = []
    k = 0
    cands = candidates(steps[0]) if steps else []
    pos = 0
    while True:
        if k == len(steps):
            break
        placed = False
        while pos < len(cands):
            undo = try_step(steps[k], cands[pos])
            pos += 1
            if undo is not None:
                stack.append((cands, pos, undo))
                k += 1
                placed = True
                break
        if placed:
            if k < len(steps):
                cands, pos = candidates(steps[k]), 0
            continue
        if not stack:
            return None
        k -= 1
        cands, pos, undo = stack.pop()
        release(steps[k], undo)

    # objects untouched by any non-identity morphism
    free_b = [y for y in b.objects if objinv[y] == -1]
    for x in a.objects:
        if objmap[x] == -1:
            y = next((y for y in free_b if objinv[y] == -1 and obj_b[y] == obj_a[x]), None)
            if y is None:
                return None
            objmap[x], objinv[y] = y, x
    for x in a.objects:
        mormap[a.identities[x]] = b.identities[objmap[x]]
    inv = [-1] * b.n_morphisms
    for m, m2 in enumerate(mormap):
        inv[m2] = m
    fwd = Functor(a, b, tuple(objmap), tuple(mormap))
    back = Functor(b, a, tuple(objinv), tuple(inv))
    return fwd, back
