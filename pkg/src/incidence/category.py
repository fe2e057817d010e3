"""Finite graded bounded acyclic categories and the presentation builder.

A category is given by generators (ranked objects and signed arrows) and path
equations.  Morphisms are classes of composable generator paths under the
smallest congruence containing the declared equations, optionally the posetal
equations (all parallel paths equal) and the bounding equations (all parallel
paths out of the null face, or into the universe, equal).
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional, Sequence

NULL = "null"
UNIVERSE = "universe"

MAX_PATHS = 500_000

_NAME = re.compile(r"[^\s.=:#]+")


class IncidenceError(Exception):
    """Base class for all errors raised by this package."""


class PresentationError(IncidenceError):
    pass


class CompositionError(IncidenceError):
    pass


class UnsignedError(IncidenceError):
    """A sign was required but the morphism or point carries none."""


class UnknownNameError(IncidenceError):
    pass


class InvalidFunctorError(IncidenceError):
    pass


class PreconditionError(IncidenceError):
    """An operation was called on input outside its domain."""


def valid_name(name: str) -> bool:
    return bool(_NAME.fullmatch(name)) and name != "->"


def sign_product(signs: Iterable[int]) -> int:
    out = 1
    for s in signs:
        if s not in (1, -1):
            raise ValueError(f"not a sign: {s!r}")
        out *= s
    return out


def sign_str(sign: Optional[int]) -> str:
    return {1: "+", -1: "-", None: ""}[sign]


@dataclass(frozen=True)
class ObjectDecl:
    name: str
    rank: int
    sign: Optional[int] = None


@dataclass(frozen=True)
class ArrowDecl:
    name: str
    source: str
    target: str
    sign: Optional[int] = None


def _as_path(path: str | Sequence[str]) -> tuple[str, ...]:
    if isinstance(path, str):
        return tuple(path.split("."))
    return tuple(path)


@dataclass
class Presentation:
    """Finite description of an incidence structure.

    Relation paths are written first-applied-first: ``("l", "s")`` is s∘l.
    """

    objects: list[ObjectDecl] = field(default_factory=list)
    arrows: list[ArrowDecl] = field(default_factory=list)
    relations: list[tuple[tuple[str, ...], tuple[str, ...]]] = field(default_factory=list)
    auto_bound: bool = True
    posetal: bool = False

    def object(self, name: str, rank: int, sign: Optional[int] = None) -> "Presentation":
        self.objects.append(ObjectDecl(name, rank, sign))
        return self

    def arrow(self, name: str, source: str, target: str, sign: Optional[int] = None) -> "Presentation":
        self.arrows.append(ArrowDecl(name, source, target, sign))
        return self

    def equal(self, left: str | Sequence[str], right: str | Sequence[str]) -> "Presentation":
        self.relations.append((_as_path(left), _as_path(right)))
        return self


@dataclass(frozen=True)
class HasseDiagram:
    """Directed multigraph: one edge (source, target, morphism) per nondecomposable morphism."""

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True, eq=False)
class Category:
    """Immutable finite category with a total composition table.

    ``table[(g, f)]`` is g∘f, defined when source(g) == target(f).  Morphism
    paths are the representative generator paths, first-applied-first; they
    are empty for identities.
    """

    object_names: tuple[str, ...]
    ranks: tuple[int, ...]
    object_signs: tuple[Optional[int], ...]
    sources: tuple[int, ...]
    targets: tuple[int, ...]
    names: tuple[str, ...]
    paths: tuple[tuple[str, ...], ...]
    signs: tuple[Optional[int], ...]
    identities: tuple[int, ...]
    table: Mapping[tuple[int, int], int]
    initial: Optional[int] = None
    terminal: Optional[int] = None

    # -- sizes and lookups ---------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.object_names)

    @property
    def n_morphisms(self) -> int:
        return len(self.sources)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(self.n_morphisms)

    @cached_property
    def _identity_set(self) -> frozenset[int]:
        return frozenset(self.identities)

    def is_identity(self, m: int) -> bool:
        return m in self._identity_set

    @cached_property
    def _object_index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.object_names)}

    @cached_property
    def _morphism_index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def object_id(self, name: str | int) -> int:
        if isinstance(name, int):
            if 0 <= name < self.n_objects:
                return name
            raise UnknownNameError(f"no object with id {name}")
        if name == NULL and self.initial is not None:
            return self.initial
        if name == UNIVERSE and self.terminal is not None:
            return self.terminal
        try:
            return self._object_index[name]
        except KeyError:
            raise UnknownNameError(f"unknown object {name!r}") from None

    def morphism_id(self, name: str | int) -> int:
        if isinstance(name, int):
            if 0 <= name < self.n_morphisms:
                return name
            raise UnknownNameError(f"no morphism with id {name}")
        try:
            return self._morphism_index[name]
        except KeyError:
            raise UnknownNameError(f"unknown morphism {name!r}") from None

    def describe(self, m: int) -> str:
        s = sign_str(self.signs[m])
        tail = f" [{s}]" if s else ""
        return (f"{self.names[m]}: {self.object_names[self.sources[m]]} -> "
                f"{self.object_names[self.targets[m]]}{tail}")

    def rank_diff(self, m: int) -> int:
        return self.ranks[self.targets[m]] - self.ranks[self.sources[m]]

    # -- composition ---------------------------------------------------------

    def compose(self, g: int, f: int) -> int:
        """Return g∘f."""
        if self.sources[g] != self.targets[f]:
            raise CompositionError(
                f"cannot compose {self.names[g]} after {self.names[f]}: "
                f"{self.object_names[self.targets[f]]} != {self.object_names[self.sources[g]]}")
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CompositionError(f"composite {self.names[g]}∘{self.names[f]} missing from table") from None

    def compose_path(self, path: Sequence[int]) -> int:
        """Compose morphisms given first-applied-first."""
        if not path:
            raise CompositionError("empty path")
        out = path[0]
        for m in path[1:]:
            out = self.compose(m, out)
        return out

    # -- cached structure ----------------------------------------------------

    @cached_property
    def _hom(self) -> dict[tuple[int, int], list[int]]:
        hom: dict[tuple[int, int], list[int]] = defaultdict(list)
        for m in self.morphisms:
            hom[(self.sources[m], self.targets[m])].append(m)
        return dict(hom)

    def hom(self, x: int, y: int) -> list[int]:
        return self._hom.get((x, y), [])

    @cached_property
    def _out(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.objects]
        for m in self.morphisms:
            out[self.sources[m]].append(m)
        return out

    @cached_property
    def _in(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in self.objects]
        for m in self.morphisms:
            inc[self.targets[m]].append(m)
        return inc

    def out_morphisms(self, x: int) -> list[int]:
        return self._out[x]

    def in_morphisms(self, y: int) -> list[int]:
        return self._in[y]

    @cached_property
    def _factorizations(self) -> list[list[tuple[int, int]]]:
        fac: list[list[tuple[int, int]]] = [[] for _ in self.morphisms]
        ids = self._identity_set
        for (g, f), h in self.table.items():
            if g not in ids and f not in ids:
                fac[h].append((f, g))
        for lst in fac:
            lst.sort()
        return fac

    def factorizations(self, m: int) -> list[tuple[int, int]]:
        """Pairs (first, second) of non-identity morphisms with second∘first = m."""
        return self._factorizations[m]

    def all_factorizations(self, m: int) -> list[tuple[int, int]]:
        """Like ``factorizations`` but also the two trivial ones through identities."""
        src, tgt = self.sources[m], self.targets[m]
        if self.is_identity(m):
            return [(m, m)]
        return [(self.identities[src], m), *self._factorizations[m], (m, self.identities[tgt])]

    @cached_property
    def nondecomposable(self) -> tuple[int, ...]:
        return tuple(m for m in self.morphisms
                     if not self.is_identity(m) and not self._factorizations[m])

    def proper_objects(self) -> list[int]:
        return [x for x in self.objects if x != self.initial and x != self.terminal]

    def initial_morphism(self, x: int) -> int:
        if self.initial is None:
            raise CompositionError("category has no initial object")
        hs = self.hom(self.initial, x)
        if len(hs) != 1:
            raise CompositionError(f"{len(hs)} morphisms from the initial object to {self.object_names[x]}")
        return hs[0]

    def terminal_morphism(self, x: int) -> int:
        if self.terminal is None:
            raise CompositionError("category has no terminal object")
        hs = self.hom(x, self.terminal)
        if len(hs) != 1:
            raise CompositionError(f"{len(hs)} morphisms from {self.object_names[x]} to the terminal object")
        return hs[0]

    def point_sign(self, x: int) -> Optional[int]:
        """Sign of a point: its declared sign, else the sign of its initial morphism."""
        if self.object_signs[x] is not None:
            return self.object_signs[x]
        if self.initial is None:
            return None
        hs = self.hom(self.initial, x)
        return self.signs[hs[0]] if len(hs) == 1 else None

    def is_thin(self) -> bool:
        return all(len(v) <= 1 for v in self._hom.values())

    @cached_property
    def top_morphism(self) -> int:
        """The unique morphism from the initial to the terminal object."""
        if self.initial is None or self.terminal is None:
            raise CompositionError("category is not bounded")
        hs = self.hom(self.initial, self.terminal)
        if len(hs) != 1:
            raise CompositionError("initial-to-terminal morphism is not unique")
        return hs[0]


def assemble(
    objects: Sequence[tuple[str, int, Optional[int]]],
    morphisms: Sequence[tuple[str, int, int, Optional[int]]],
    identities: Sequence[int],
    compose: Callable[[int, int], int],
    initial: Optional[int] = None,
    terminal: Optional[int] = None,
) -> Category:
    """Build a Category from explicit data and a composition function.

    ``compose(g, f)`` is called for every pair with source(g) == target(f) and
    must return the id of g∘f.  Representative paths are recomputed as
    decompositions into nondecomposable morphisms.
    """
    names = [n for n, _, _ in objects]
    sources = tuple(s for _, s, _, _ in morphisms)
    targets = tuple(t for _, _, t, _ in morphisms)
    into: dict[int, list[int]] = defaultdict(list)
    for m, t in enumerate(targets):
        into[t].append(m)
    table: dict[tuple[int, int], int] = {}
    for g, s in enumerate(sources):
        for f in into.get(s, ()):
            table[(g, f)] = compose(g, f)
    mnames = tuple(_dedupe([n for n, _, _, _ in morphisms]))
    idset = set(identities)
    split: dict[int, tuple[int, int]] = {}
    for (g, f), h in table.items():
        if g not in idset and f not in idset and h not in split:
            split[h] = (f, g)
    paths: dict[int, tuple[str, ...]] = {}

    def path(m: int) -> tuple[str, ...]:
        if m in paths:
            return paths[m]
        stack = [m]
        while stack:
            top = stack[-1]
            if top in paths:
                stack.pop()
                continue
            if top in idset:
                paths[top] = ()
            elif top not in split:
                paths[top] = (mnames[top],)
            else:
                f, g = split[top]
                missing = [x for x in (f, g) if x not in paths]
                if missing:
                    stack.extend(missing)
                    continue
                paths[top] = paths[f] + paths[g]
            stack.pop()
        return paths[m]

    return Category(
        object_names=tuple(_dedupe(names)),
        ranks=tuple(r for _, r, _ in objects),
        object_signs=tuple(s for _, _, s in objects),
        sources=sources,
        targets=targets,
        names=mnames,
        paths=tuple(path(m) for m in range(len(morphisms))),
        signs=tuple(s for _, _, _, s in morphisms),
        identities=tuple(identities),
        table=table,
        initial=initial,
        terminal=terminal,
    )


def _dedupe(names: Sequence[str]) -> list[str]:
    seen: dict[str, int] = {}
    out = []
    for n in names:
        if n in seen:
            seen[n] += 1
            cand = f"{n}~{seen[n]}"
            while cand in seen:
                seen[n] += 1
                cand = f"{n}~{seen[n]}"
            seen[cand] = 0
            out.append(cand)
        else:
            seen[n] = 0
            out.append(n)
    return out


# -- building from presentations ---------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "_"
    taken.add(name)
    return name


def build_category(p: Presentation) -> Category:
    """Quotient the free category on the generators by the generated congruence."""
    # objects
    decls = list(p.objects)
    names = [o.name for o in decls]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise PresentationError(f"duplicate object name {dup!r}")
    for n in names:
        if not valid_name(n):
            raise PresentationError(f"invalid object name {n!r}")
    for o in decls:
        if o.sign not in (None, 1, -1):
            raise PresentationError(f"invalid sign {o.sign!r} on object {o.name!r}")
    if p.auto_bound:
        proper = [o for o in decls if o.name not in (NULL, UNIVERSE)]
        if NULL not in names:
            decls.insert(0, ObjectDecl(NULL, -1))
        if UNIVERSE not in names:
            null_rank = next(o.rank for o in decls if o.name == NULL)
            top = max((o.rank for o in proper), default=null_rank) + 1
            decls.append(ObjectDecl(UNIVERSE, top))
    obj_index = {o.name: i for i, o in enumerate(decls)}
    ranks = [o.rank for o in decls]
    null = obj_index.get(NULL)
    universe = obj_index.get(UNIVERSE)

    # arrows
    arrows = list(p.arrows)
    anames = [a.name for a in arrows]
    if len(set(anames)) != len(anames):
        dup = next(n for n in anames if anames.count(n) > 1)
        raise PresentationError(f"duplicate arrow name {dup!r}")
    for a in arrows:
        if not valid_name(a.name):
            raise PresentationError(f"invalid arrow name {a.name!r}")
        for end in (a.source, a.target):
            if end not in obj_index:
                raise PresentationError(f"arrow {a.name!r}: unknown object {end!r}")
        if a.sign not in (None, 1, -1):
            raise PresentationError(f"invalid sign {a.sign!r} on arrow {a.name!r}")
    if p.auto_bound:
        taken = set(anames)
        has_in = {obj_index[a.target] for a in arrows}
        has_out = {obj_index[a.source] for a in arrows}
        proper_ids = [i for i in range(len(decls)) if i not in (null, universe)]
        extra_in, extra_out = [], []
        for i in proper_ids:
            o = decls[i]
            if i not in has_in:
                extra_in.append(ArrowDecl(_fresh(f"i_{o.name}", taken), NULL, o.name, o.sign))
            if i not in has_out:
                extra_out.append(ArrowDecl(_fresh(f"t_{o.name}", taken), o.name, UNIVERSE))
        if not proper_ids and not any(a.source == NULL and a.target == UNIVERSE for a in arrows):
            extra_in.append(ArrowDecl(_fresh("i_universe", taken), NULL, UNIVERSE))
        arrows = extra_in + arrows + extra_out
    # points inherit the sign of their declared initial arrow and vice versa
    osigns = [o.sign for o in decls]
    for k, a in enumerate(arrows):
        t = obj_index[a.target]
        if a.source == NULL and osigns[t] is not None:
            if a.sign is None:
                arrows[k] = ArrowDecl(a.name, a.source, a.target, osigns[t])
            elif a.sign != osigns[t]:
                raise PresentationError(
                    f"arrow {a.name!r} has sign {sign_str(a.sign)} but point {a.target!r} "
                    f"is declared {sign_str(osigns[t])}")
    a_src = [obj_index[a.source] for a in arrows]
    a_tgt = [obj_index[a.target] for a in arrows]
    for k, a in enumerate(arrows):
        if ranks[a_src[k]] >= ranks[a_tgt[k]]:
            raise PresentationError(
                f"arrow {a.name!r}: rank {ranks[a_src[k]]} of {a.source!r} is not below "
                f"rank {ranks[a_tgt[k]]} of {a.target!r}")
    arrow_index = {a.name: k for k, a in enumerate(arrows)}

    # enumerate all paths; keys are (source, arrow-index tuple)
    n_obj = len(decls)
    out_arrows: list[list[int]] = [[] for _ in range(n_obj)]
    for k in range(len(arrows)):
        out_arrows[a_src[k]].append(k)
    path_keys: list[tuple[int, tuple[int, ...]]] = []
    path_tgt: list[int] = []
    for x in range(n_obj):
        stack: list[tuple[tuple[int, ...], int]] = [((), x)]
        while stack:
            seq, end = stack.pop()
            path_keys.append((x, seq))
            path_tgt.append(end)
            if len(path_keys) > MAX_PATHS:
                raise PresentationError(f"more than {MAX_PATHS} generator paths; presentation too large")
            for k in reversed(out_arrows[end]):
                stack.append((seq + (k,), a_tgt[k]))
    index = {key: i for i, key in enumerate(path_keys)}
    uf = _UnionFind(len(path_keys))

    def resolve(path: tuple[str, ...], which: str) -> int:
        if not path or any(not s for s in path):
            raise PresentationError(f"relation {which} side is empty")
        try:
            seq = tuple(arrow_index[s] for s in path)
        except KeyError as e:
            raise PresentationError(f"relation uses unknown arrow {e.args[0]!r}") from None
        for a, b in zip(seq, seq[1:]):
            if a_tgt[a] != a_src[b]:
                raise PresentationError(
                    f"relation path {'.'.join(path)} is not composable at "
                    f"{arrows[a].name}.{arrows[b].name}")
        return index[(a_src[seq[0]], seq)]

    for left, right in p.relations:
        i, j = resolve(left, "left"), resolve(right, "right")
        if path_keys[i][0] != path_keys[j][0] or path_tgt[i] != path_tgt[j]:
            raise PresentationError(
                f"relation {'.'.join(left)} = {'.'.join(right)} relates paths with different endpoints")
        uf.union(i, j)

    nonempty = [i for i, (_, seq) in enumerate(path_keys) if seq]
    if p.posetal:
        _union_groups(uf, nonempty, lambda i: (path_keys[i][0], path_tgt[i]))
    if p.auto_bound:
        _union_groups(uf, [i for i in nonempty if path_keys[i][0] == null], lambda i: path_tgt[i])
        _union_groups(uf, [i for i in nonempty if path_tgt[i] == universe], lambda i: path_keys[i][0])

    # congruence: close under appending and prepending single arrows
    right_ext: list[list[tuple[int, int]]] = [[] for _ in path_keys]
    left_ext: list[list[tuple[int, int]]] = [[] for _ in path_keys]
    for i, (x, seq) in enumerate(path_keys):
        for k in out_arrows[path_tgt[i]]:
            right_ext[i].append((k, index[(x, seq + (k,))]))
        for k in range(len(arrows)):
            if a_tgt[k] == x:
                left_ext[i].append((k, index[(a_src[k], (k,) + seq)]))
    changed = True
    while changed:
        changed = False
        for exts in (right_ext, left_ext):
            seen: dict[tuple[int, int], int] = {}
            for i, lst in enumerate(exts):
                r = uf.find(i)
                for k, j in lst:
                    prev = seen.setdefault((r, k), j)
                    if prev != j and uf.union(prev, j):
                        changed = True

    # classes become morphisms
    classes: dict[int, list[int]] = defaultdict(list)
    for i in range(len(path_keys)):
        classes[uf.find(i)].append(i)

    def rep_key(i: int) -> tuple:
        x, seq = path_keys[i]
        return (len(seq), seq)

    members = []
    for lst in classes.values():
        lst.sort(key=rep_key)
        members.append(lst)
    members.sort(key=lambda lst: (path_keys[lst[0]][0], path_tgt[lst[0]], rep_key(lst[0])))
    cls_of = {}
    for m, lst in enumerate(members):
        for i in lst:
            cls_of[i] = m

    sources, targets, mnames, mpaths, msigns = [], [], [], [], []
    identities = [0] * n_obj
    for m, lst in enumerate(members):
        x, seq = path_keys[lst[0]]
        sources.append(x)
        targets.append(path_tgt[lst[0]])
        singles = [path_keys[i][1][0] for i in lst if len(path_keys[i][1]) == 1]
        signed = {arrows[k].sign for k in singles if arrows[k].sign is not None}
        if len(signed) > 1:
            raise PresentationError(
                "equated arrows with conflicting signs: "
                + ", ".join(f"{arrows[k].name}[{sign_str(arrows[k].sign)}]" for k in singles))
        msigns.append(signed.pop() if signed else None)
        if not seq:
            identities[x] = m
            mnames.append(f"id_{decls[x].name}")
        elif singles:
            mnames.append(arrows[min(singles)].name)
        else:
            mnames.append(">".join(arrows[k].name for k in seq))
        mpaths.append(tuple(arrows[k].name for k in seq))

    table: dict[tuple[int, int], int] = {}
    for f, lf in enumerate(members):
        xf, sf = path_keys[lf[0]]
        for g in range(len(members)):
            if sources[g] != targets[f]:
                continue
            sg = path_keys[members[g][0]][1]
            table[(g, f)] = cls_of[index[(xf, sf + sg)]]

    return Category(
        object_names=tuple(o.name for o in decls),
        ranks=tuple(ranks),
        object_signs=tuple(osigns),
        sources=tuple(sources),
        targets=tuple(targets),
        names=tuple(_dedupe(mnames)),
        paths=tuple(mpaths),
        signs=tuple(msigns),
        identities=tuple(identities),
        table=table,
        initial=null,
        terminal=universe,
    )


def _union_groups(uf: _UnionFind, items: Iterable[int], key: Callable[[int], object]) -> None:
    first: dict[object, int] = {}
    for i in items:
        k = key(i)
        if k in first:
            uf.union(first[k], i)
        else:
            first[k] = i


# -- operations --------------------------------------------------------------


def compose(c: Category, g: int, f: int) -> int:
    return c.compose(g, f)


def chain_sign(c: Category, path: Sequence[int]) -> int:
    """Product of the signs along a path of morphisms."""
    out = 1
    for m in path:
        s = c.signs[m]
        if s is None:
            raise UnsignedError(f"morphism {c.describe(m)} carries no sign")
        out *= s
    return out


def opposite(c: Category) -> Category:
    """Reverse all morphisms; ranks are reflected so the grading still increases."""
    if c.initial is not None and c.terminal is not None:
        pivot = c.ranks[c.initial] + c.ranks[c.terminal]
    else:
        pivot = 0
    return Category(
        object_names=c.object_names,
        ranks=tuple(pivot - r for r in c.ranks),
        object_signs=tuple(None for _ in c.objects),
        sources=c.targets,
        targets=c.sources,
        names=c.names,
        paths=tuple(tuple(reversed(p)) for p in c.paths),
        signs=c.signs,
        identities=c.identities,
        table={(f, g): h for (g, f), h in c.table.items()},
        initial=c.terminal,
        terminal=c.initial,
    )


def induced_poset(c: Category) -> frozenset[tuple[int, int]]:
    """Pairs (x, y) with x <= y, i.e. some morphism x -> y exists."""
    return frozenset((c.sources[m], c.targets[m]) for m in c.morphisms)


def hasse(c: Category) -> HasseDiagram:
    edges = tuple(sorted((c.sources[m], c.targets[m], m) for m in c.nondecomposable))
    return HasseDiagram(nodes=tuple(c.objects), edges=edges)


def full_subcategory(c: Category, objects: Iterable[int]) -> Category:
    """Restrict to the given objects and all morphisms among them."""
    keep = sorted(set(objects))
    onew = {x: i for i, x in enumerate(keep)}
    mkeep = [m for m in c.morphisms if c.sources[m] in onew and c.targets[m] in onew]
    mnew = {m: i for i, m in enumerate(mkeep)}
    table = {}
    for (g, f), h in c.table.items():
        if g in mnew and f in mnew:
            if h not in mnew:
                raise CompositionError("object set is not closed under composition")
            table[(mnew[g], mnew[f])] = mnew[h]
    return Category(
        object_names=tuple(c.object_names[x] for x in keep),
        ranks=tuple(c.ranks[x] for x in keep),
        object_signs=tuple(c.object_signs[x] for x in keep),
        sources=tuple(onew[c.sources[m]] for m in mkeep),
        targets=tuple(onew[c.targets[m]] for m in mkeep),
        names=tuple(c.names[m] for m in mkeep),
        paths=tuple(c.paths[m] for m in mkeep),
        signs=tuple(c.signs[m] for m in mkeep),
        identities=tuple(mnew[c.identities[x]] for x in keep),
        table=table,
        initial=onew.get(c.initial) if c.initial is not None else None,
        terminal=onew.get(c.terminal) if c.terminal is not None else None,
    )


# -- functors ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Functor:
    source: Category
    target: Category
    object_map: tuple[int, ...]
    morphism_map: tuple[int, ...]

    def then(self, other: "Functor") -> "Functor":
        """The composite other∘self."""
        if other.source is not self.target:
            raise InvalidFunctorError("functors are not composable")
        return Functor(
            self.source, other.target,
            tuple(other.object_map[y] for y in self.object_map),
            tuple(other.morphism_map[m] for m in self.morphism_map),
        )

    def same_maps(self, other: "Functor") -> bool:
        return self.object_map == other.object_map and self.morphism_map == other.morphism_map


def identity_functor(c: Category) -> Functor:
    return Functor(c, c, tuple(c.objects), tuple(c.morphisms))


def functor_violations(F: Functor) -> list[str]:
    """Every way in which F fails to preserve sources, targets, identities and composition."""
    a, b = F.source, F.target
    out = []
    if len(F.object_map) != a.n_objects or len(F.morphism_map) != a.n_morphisms:
        return ["map sizes do not match the source category"]
    for m in a.morphisms:
        fm = F.morphism_map[m]
        if b.sources[fm] != F.object_map[a.sources[m]] or b.targets[fm] != F.object_map[a.targets[m]]:
            out.append(f"endpoints of {a.names[m]} not preserved")
    for x in a.objects:
        if F.morphism_map[a.identities[x]] != b.identities[F.object_map[x]]:
            out.append(f"identity of {a.object_names[x]} not preserved")
    if out:
        return out
    for (g, f), h in a.table.items():
        if b.table.get((F.morphism_map[g], F.morphism_map[f])) != F.morphism_map[h]:
            out.append(f"composite {a.names[g]}∘{a.names[f]} not preserved")
    return out


def check_functor(F: Functor) -> None:
    bad = functor_violations(F)
    if bad:
        raise InvalidFunctorError("; ".join(bad[:5]))
