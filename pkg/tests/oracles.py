"""Brute-force reference computations, written independently of the package internals.

They only read a Presentation's declarations or a Category's public tables,
and recompute everything from scratch by exhaustive enumeration.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict

from incidence.category import Category, Presentation

NULL, UNIVERSE = "null", "universe"


def bounded_generators(p: Presentation):
    """Objects {name: rank} and arrows [(name, src, tgt)] after adding bounds."""
    ranks = {o.name: o.rank for o in p.objects}
    arrows = [(a.name, a.source, a.target) for a in p.arrows]
    if not p.auto_bound:
        return ranks, arrows
    proper = [n for n in ranks if n not in (NULL, UNIVERSE)]
    ranks.setdefault(NULL, -1)
    if UNIVERSE not in ranks:
        ranks[UNIVERSE] = max((ranks[n] for n in proper), default=ranks[NULL]) + 1
    targets = {t for _, _, t in arrows}
    sources = {s for _, s, _ in arrows}
    for n in proper:
        if n not in targets:
            arrows.append((f"<in {n}>", NULL, n))
        if n not in sources:
            arrows.append((f"<out {n}>", n, UNIVERSE))
    if not proper:
        arrows.append(("<top>", NULL, UNIVERSE))
    return ranks, arrows


class PathQuotient:
    """All generator paths, quotiented by the congruence generated by the relations.

    The congruence generated by a set R of pairs is the equivalence closure of
    {(u p v, u q v) : (p, q) in R}; every context (u, v) is enumerated.
    """

    def __init__(self, p: Presentation):
        ranks, arrows = bounded_generators(p)
        self.ranks = ranks
        src = {a: s for a, s, _ in arrows}
        tgt = {a: t for a, _, t in arrows}
        paths = [(x, ()) for x in ranks]
        frontier = list(paths)
        while frontier:
            nxt = []
            for x, seq in frontier:
                end = tgt[seq[-1]] if seq else x
                for a, s, _ in arrows:
                    if s == end:
                        nxt.append((x, seq + (a,)))
            paths += nxt
            frontier = nxt
        self.paths = paths
        self.end = {q: (tgt[q[1][-1]] if q[1] else q[0]) for q in paths}
        parent = {q: q for q in paths}

        def find(q):
            while parent[q] != q:
                parent[q] = parent[parent[q]]
                q = parent[q]
            return q

        def union(a, b):
            parent[find(a)] = find(b)

        gens = []
        for left, right in p.relations:
            gens.append(((src[left[0]], tuple(left)), (src[right[0]], tuple(right))))
        by_ends = defaultdict(list)
        for q in paths:
            if q[1]:
                by_ends[(q[0], self.end[q])].append(q)
        for (x, y), group in by_ends.items():
            if p.posetal or (p.auto_bound and (x == NULL or y == UNIVERSE)):
                gens += [(group[0], other) for other in group[1:]]
        into = defaultdict(list)     # paths ending at an object
        outof = defaultdict(list)    # paths starting at an object
        for q in paths:
            into[self.end[q]].append(q)
            outof[q[0]].append(q)
        for (xa, pa), (xb, pb) in gens:
            for u in into[xa]:
                for v in outof[self.end[(xa, pa)]]:
                    union((u[0], u[1] + pa + v[1]), (u[0], u[1] + pb + v[1]))
        self.find = find

    def classes(self) -> dict:
        out = defaultdict(list)
        for q in self.paths:
            out[self.find(q)].append(q)
        return out

    def n_morphisms(self) -> int:
        return len(self.classes())

    def hom_counts(self) -> Counter:
        return Counter((q[0], self.end[q]) for q in self.classes())


def brute_factorization_counts(c: Category) -> list[int]:
    ids = set(c.identities)
    counts = [0] * c.n_morphisms
    for f in c.morphisms:
        for g in c.morphisms:
            if f in ids or g in ids or c.targets[f] != c.sources[g]:
                continue
            counts[c.table[(g, f)]] += 1
    return counts


def brute_chain_count(c: Category, host: int, n: int) -> int:
    """Non-degenerate n-chains of host by trying every (n+1)-tuple of non-identity morphisms."""
    ids = set(c.identities)
    nonid = [m for m in c.morphisms if m not in ids]
    count = 0
    for tup in itertools.product(nonid, repeat=n + 1):
        if c.sources[tup[0]] != c.sources[host]:
            continue
        acc = tup[0]
        ok = True
        for f in tup[1:]:
            if c.sources[f] != c.targets[acc]:
                ok = False
                break
            acc = c.table[(f, acc)]
        if ok and acc == host:
            count += 1
    return count


def cube_face_lattice(dim: int = 3):
    """Faces {0,1,x}^dim plus bottom and top; order by containment."""
    faces = ["".join(w) for w in itertools.product("01x", repeat=dim)]

    def contains(big: str, small: str) -> bool:
        return all(b == "x" or b == s for b, s in zip(big, small))

    elems = ["bottom"] + faces + ["top"]
    rank = {"bottom": -1, "top": dim + 1, **{f: f.count("x") for f in faces}}
    leq = set()
    for a in elems:
        for b in elems:
            if a == b or a == "bottom" or b == "top" or (a in faces and b in faces and contains(b, a)):
                leq.add((a, b))
    return elems, rank, leq


def poset_chain_counts(elems, rank, leq, bottom, top, max_n: int) -> list[int]:
    """Strict chains bottom < x1 < ... < xn < top for n = 1..max_n.

    A chain is determined by its element set, listed in rank order.
    """
    inner = sorted((e for e in elems if e not in (bottom, top)), key=lambda e: rank[e])
    out = []
    for n in range(1, max_n + 1):
        total = 0
        for combo in itertools.combinations(inner, n):
            if all(rank[a] < rank[b] and (a, b) in leq for a, b in zip(combo, combo[1:])):
                total += 1
        out.append(total)
    return out
