"""Morphism chains, nerves and their oriented realization.

A chain stores its factors first-applied-first: (f1, ..., f_{n+1}) composes
to f_{n+1}∘...∘f1 and passes through n intermediate objects.  Face and
degeneracy indices count intermediate objects from the target end, so d_1
composes the last two factors and s_1 repeats the last intermediate object.
With this orientation the chains through a fixed first object are exactly the
iterated d_1-preimages of a 1-chain, and the first boundary of every simplex
is the positive one.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Optional

from .category import Category, CompositionError, PreconditionError
from .constructions import upper_derived
from .report import ValidationReport, Witness

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Chain:
    factors: tuple[int, ...]
    category: Category = field(compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.factors:
            raise PreconditionError("a chain needs at least one factor")

    @property
    def n(self) -> int:
        return len(self.factors) - 1

    @property
    def host(self) -> int:
        return self.category.compose_path(self.factors)

    def objects(self) -> tuple[int, ...]:
        c = self.category
        return (c.sources[self.factors[0]],) + tuple(c.targets[f] for f in self.factors)

    def is_degenerate(self) -> bool:
        return any(self.category.is_identity(f) for f in self.factors)

    def render(self) -> str:
        c = self.category
        return " -> ".join(c.object_names[x] for x in self.objects())


def make_chain(c: Category, factors) -> Chain:
    """Validate composability; the host is always recomputed."""
    factors = tuple(c.morphism_id(f) for f in factors)
    for f, g in zip(factors, factors[1:]):
        if c.targets[f] != c.sources[g]:
            raise CompositionError(f"{c.names[f]} and {c.names[g]} are not composable")
    return Chain(factors, c)


def _check_index(ch: Chain, i: int) -> int:
    if not 1 <= i <= ch.n:
        raise IndexError(f"index {i} out of range 1..{ch.n}")
    return ch.n + 1 - i   # the intermediate object, counted from the source end


def subchain(ch: Chain, i: int) -> Chain:
    """d_i: compose the two factors meeting at the i-th intermediate object from the target end."""
    k = _check_index(ch, i)
    f = ch.factors
    return Chain(f[:k - 1] + (ch.category.compose(f[k], f[k - 1]),) + f[k + 1:], ch.category)


face_map = subchain


def degeneracy(ch: Chain, i: int) -> Chain:
    """s_i: repeat the i-th intermediate object from the target end via its identity."""
    k = _check_index(ch, i)
    c = ch.category
    f = ch.factors
    return Chain(f[:k] + (c.identities[c.targets[f[k - 1]]],) + f[k:], c)


def _chains(c: Category, host: int, n: int, degenerate: bool, memo: dict) -> list[tuple[int, ...]]:
    key = (host, n)
    if key in memo:
        return memo[key]
    if n == 0:
        out = [(host,)]
    else:
        facs = c.all_factorizations(host) if degenerate else c.factorizations(host)
        out = sorted({(first,) + rest for first, second in facs
                      for rest in _chains(c, second, n - 1, degenerate, memo)})
    memo[key] = out
    return out


def enumerate_chains(c: Category, host: int | str, n: int, degenerate: bool = False) -> list[Chain]:
    if n < 0:
        raise PreconditionError("n must be non-negative")
    host = c.morphism_id(host)
    return [Chain(f, c) for f in _chains(c, host, n, degenerate, {})]


@dataclass(frozen=True, eq=False)
class Nerve:
    """Levels N_0..N_L of chains, degenerate included, with materialized maps.

    ``faces[n][k][i-1]`` is the index in level n-1 of d_i of chain k in level
    n, and ``degeneracies[n][k][i-1]`` the index in level n+1 of s_i (absent
    for the top level).  ``shift`` is the number of extra intermediate
    objects every chain carries, nonzero only for nerves cut out of a larger
    one by upper_via_nerve.
    """

    category: Category
    host: int
    levels: tuple[tuple[Chain, ...], ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    degeneracies: tuple[tuple[tuple[int, ...], ...], ...]
    shift: int = 0

    @property
    def max_level(self) -> int:
        return len(self.levels) - 1

    def index(self, n: int) -> dict[Chain, int]:
        return {ch: k for k, ch in enumerate(self.levels[n])}

    def nondegenerate(self, n: int) -> list[Chain]:
        return [ch for ch in self.levels[n] if not ch.is_degenerate()]

    def counts(self) -> list[int]:
        """Non-degenerate chain counts for levels 1..L."""
        return [len(self.nondegenerate(n)) for n in range(1, len(self.levels))]

    def to_dict(self) -> dict[str, Any]:
        c = self.category
        return {
            "version": FORMAT_VERSION,
            "kind": "nerve",
            "host": c.names[self.host],
            "morphisms": list(c.names),
            "levels": [
                {
                    "n": n,
                    "chains": [list(ch.factors) for ch in level],
                    "degenerate": [ch.is_degenerate() for ch in level],
                    "faces": [list(f) for f in self.faces[n]],
                    "degeneracies": [list(s) for s in self.degeneracies[n]] if n < self.max_level else None,
                }
                for n, level in enumerate(self.levels)
            ],
        }


def _materialize(c: Category, host: int, levels: list[list[Chain]], shift: int) -> Nerve:
    idx = [{ch: k for k, ch in enumerate(level)} for level in levels]
    faces, degens = [], []
    for n, level in enumerate(levels):
        faces.append(tuple(tuple(idx[n - 1][subchain(ch, i)] for i in range(1, n + 1)) for ch in level))
        if n + 1 < len(levels):
            degens.append(tuple(tuple(idx[n + 1][degeneracy(ch, i)] for i in range(1, n + 1)) for ch in level))
        else:
            degens.append(())
    return Nerve(c, host, tuple(tuple(l) for l in levels), tuple(faces), tuple(degens), shift)


def rank_spread(c: Category) -> int:
    return c.ranks[c.terminal] - c.ranks[c.initial]


def nerve_of(c: Category, max_level: Optional[int] = None) -> Nerve:
    """Full nerve of the initial-to-terminal morphism, levels 0..max_level."""
    if c.initial is None or c.terminal is None:
        raise PreconditionError("nerve_of needs a bounded category")
    spread = rank_spread(c)
    if max_level is None:
        max_level = spread
    if max_level < spread:
        raise PreconditionError(f"max_level {max_level} is below the rank spread {spread}")
    host = c.top_morphism
    memo: dict = {}
    levels = [[Chain(f, c) for f in _chains(c, host, n, True, memo)] for n in range(max_level + 1)]
    return _materialize(c, host, levels, 0)


def upper_via_nerve(nv: Nerve, F: Chain) -> Nerve:
    """Level n holds the n-fold d_1-preimages of the 1-chain F.

    Truncated at the rank spread of the upper category of F's first object.
    """
    if nv.shift:
        raise PreconditionError("upper_via_nerve needs a full nerve")
    if F.n != 1 or F not in nv.index(1):
        raise PreconditionError("F must be a 1-chain of the nerve")
    c = nv.category
    first = F.factors[0]
    top = c.ranks[c.targets[nv.host]] - c.ranks[c.targets[first]]
    levels = []
    for n in range(min(top, nv.max_level - 1) + 1):
        levels.append([ch for ch in nv.levels[n + 1] if ch.factors[0] == first])
    return _materialize(c, nv.host, levels, 1)


def check_upper_via_nerve(c: Category, F: Chain, nv: Optional[Nerve] = None) -> ValidationReport:
    """Compare upper_via_nerve(nerve_of(c), F) with the nerve of the upper category.

    The bijection sends a chain (g1, ..., g_k) of upper(c, X) to
    (i_X, D g1, ..., D g_k) with D the downward functor; it must be a
    level-wise bijection commuting with every face and degeneracy map.
    """
    via = upper_via_nerve(nv if nv is not None else nerve_of(c), F)
    x = c.targets[F.factors[0]]
    d = upper_derived(c, x)
    direct = nerve_of(d.category)
    D = d.functor.morphism_map
    ws: list[Witness] = []
    if via.max_level != direct.max_level:
        ws.append(Witness("note", (), f"levels: {via.max_level} vs {direct.max_level}"))
        return ValidationReport.of("upper_via_nerve", ws)
    maps = []
    for n in range(direct.max_level + 1):
        target = via.index(n)
        image = []
        for ch in direct.levels[n]:
            lifted = Chain((F.factors[0],) + tuple(D[g] for g in ch.factors), c)
            if lifted not in target:
                ws.append(Witness("chain", lifted.factors, f"level {n}: {lifted.render()} missing"))
            image.append(target.get(lifted, -1))
        if sorted(image) != list(range(len(via.levels[n]))):
            ws.append(Witness("note", (n,), f"level {n}: not a bijection"))
        maps.append(image)
    if not ws:
        for n in range(direct.max_level + 1):
            for k in range(len(direct.levels[n])):
                j = maps[n][k]
                if n and tuple(maps[n - 1][f] for f in direct.faces[n][k]) != via.faces[n][j]:
                    ws.append(Witness("chain", direct.levels[n][k].factors, f"level {n}: faces disagree"))
                if n < direct.max_level and \
                        tuple(maps[n + 1][s] for s in direct.degeneracies[n][k]) != via.degeneracies[n][j]:
                    ws.append(Witness("chain", direct.levels[n][k].factors, f"level {n}: degeneracies disagree"))
    return ValidationReport.of("upper_via_nerve", ws)


def check_simplicial_identities(nv: Nerve) -> ValidationReport:
    """Face/degeneracy identities on every materialized level where both sides exist."""
    F, S = nv.faces, nv.degeneracies
    L = nv.max_level
    ws: list[Witness] = []

    def d(n, k, i):
        return F[n][k][i - 1]

    def s(n, k, i):
        return S[n][k][i - 1]

    for n in range(L + 1):
        for k, ch in enumerate(nv.levels[n]):
            bad = []
            for j in range(1, n + 1):
                for i in range(1, j):
                    if n >= 2 and d(n - 1, d(n, k, j), i) != d(n - 1, d(n, k, i), j - 1):
                        bad.append(f"d{i}d{j}")
            if n < L:
                for j in range(1, n + 1):
                    up = s(n, k, j)
                    for i in range(1, n + 2):
                        lhs = d(n + 1, up, i)
                        if i < j:
                            ok = lhs == s(n - 1, d(n, k, i), j - 1)
                        elif i in (j, j + 1):
                            ok = lhs == k
                        else:
                            ok = lhs == s(n - 1, d(n, k, i - 1), j)
                        if not ok:
                            bad.append(f"d{i}s{j}")
                if n + 1 < L:
                    for j in range(1, n + 1):
                        for i in range(1, j + 1):
                            if s(n + 1, s(n, k, j), i) != s(n + 1, s(n, k, i), j + 1):
                                bad.append(f"s{i}s{j}")
            if bad:
                ws.append(Witness("chain", ch.factors, f"level {n} {ch.render()}: {', '.join(bad)}"))
    return ValidationReport.of("simplicial_identities", ws)


@dataclass(frozen=True, eq=False)
class OrientedComplex:
    """cells[d + 1] lists the d-simplices as chains, from the null face at d = -1.

    ``boundary[d + 1][k]`` holds (face index in dimension d - 1, sign) pairs
    in face order d_1, d_2, ...
    """

    cells: tuple[tuple[Chain, ...], ...]
    boundary: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.cells) - 2

    def count(self, d: int) -> int:
        return len(self.cells[d + 1]) if -1 <= d <= self.dimension else 0

    def counts(self) -> list[int]:
        """Simplex counts for dimensions 0..dimension."""
        return [len(cs) for cs in self.cells[1:]]

    def to_dict(self) -> dict[str, Any]:
        names = None
        if self.cells and self.cells[0]:
            names = list(self.cells[0][0].category.names)
        return {
            "version": FORMAT_VERSION,
            "kind": "oriented_complex",
            "morphisms": names,
            "dimensions": [
                {
                    "dim": d - 1,
                    "simplices": [
                        {"chain": list(ch.factors), "boundary": [[f, s] for f, s in self.boundary[d][k]]}
                        for k, ch in enumerate(cs)
                    ],
                }
                for d, cs in enumerate(self.cells)
            ],
            "euler": euler_characteristic(self),
        }


def realize(nv: Nerve) -> OrientedComplex:
    """One (n-1)-simplex per non-degenerate n-chain; face d_i carries sign (-1)^(i+1)."""
    cells: list[tuple[Chain, ...]] = []
    boundary = []
    prev_pos: dict[int, int] = {}
    for n in range(nv.max_level + 1):
        keep = [k for k, ch in enumerate(nv.levels[n]) if not ch.is_degenerate()]
        pos = {k: j for j, k in enumerate(keep)}
        bd = []
        for k in keep:
            faces = []
            for i, f in enumerate(nv.faces[n][k], start=1):
                if f not in prev_pos:
                    raise CompositionError(f"degenerate face of {nv.levels[n][k].render()}")
                faces.append((prev_pos[f], 1 if i % 2 else -1))
            bd.append(tuple(faces))
        cells.append(tuple(nv.levels[n][k] for k in keep))
        boundary.append(tuple(bd))
        prev_pos = pos
    while len(cells) > 1 and not cells[-1]:
        cells.pop()
        boundary.pop()
    return OrientedComplex(tuple(cells), tuple(boundary))


def boundary_squared_is_zero(oc: OrientedComplex) -> ValidationReport:
    ws: list[Witness] = []
    for d in range(2, len(oc.cells)):
        for k, bd in enumerate(oc.boundary[d]):
            acc: Counter[int] = Counter()
            for f, s in bd:
                for g, t in oc.boundary[d - 1][f]:
                    acc[g] += s * t
            bad = sorted(g for g, v in acc.items() if v)
            if bad:
                ch = oc.cells[d][k]
                ws.append(Witness("simplex", ch.factors, f"dim {d - 1} {ch.render()}: ∂∂ hits {len(bad)} faces"))
    return ValidationReport.of("boundary_squared", ws)


def euler_characteristic(oc: OrientedComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(oc.counts()))
