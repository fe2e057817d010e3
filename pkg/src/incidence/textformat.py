"""Line-oriented text format for presentations.

::

    # a segment
    object A rank 0 sign +
    object L rank 1
    arrow l : A -> L sign +
    equal l.s = l2.s2
    option posetal
    option no_auto_bound

The names ``null`` and ``universe`` denote the bounds.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Optional

from .category import (
    NULL,
    UNIVERSE,
    Category,
    Presentation,
    PresentationError,
    build_category,
    sign_str,
    valid_name,
)


class ParseError(PresentationError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _sign(tok: str, lineno: int) -> int:
    if tok == "+":
        return 1
    if tok == "-":
        return -1
    raise ParseError(lineno, f"expected sign + or -, got {tok!r}")


def _name(tok: str, lineno: int) -> str:
    if not valid_name(tok):
        raise ParseError(lineno, f"invalid name {tok!r}")
    return tok


def parse_presentation(text: str) -> Presentation:
    p = Presentation()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw = toks[0]
        if kw == "object":
            # object <name> rank <int> [sign +|-]
            if len(toks) not in (4, 6) or toks[2] != "rank":
                raise ParseError(lineno, "expected: object <name> rank <int> [sign +|-]")
            try:
                rank = int(toks[3])
            except ValueError:
                raise ParseError(lineno, f"rank must be an integer, got {toks[3]!r}") from None
            sign = None
            if len(toks) == 6:
                if toks[4] != "sign":
                    raise ParseError(lineno, f"unexpected {toks[4]!r}")
                sign = _sign(toks[5], lineno)
            p.object(_name(toks[1], lineno), rank, sign)
        elif kw == "arrow":
            # arrow <name> : <src> -> <dst> [sign +|-]
            if len(toks) not in (6, 8) or toks[2] != ":" or toks[4] != "->":
                raise ParseError(lineno, "expected: arrow <name> : <src> -> <dst> [sign +|-]")
            sign = None
            if len(toks) == 8:
                if toks[6] != "sign":
                    raise ParseError(lineno, f"unexpected {toks[6]!r}")
                sign = _sign(toks[7], lineno)
            p.arrow(_name(toks[1], lineno), _name(toks[3], lineno), _name(toks[5], lineno), sign)
        elif kw == "equal":
            body = line[len("equal"):]
            if body.count("=") != 1:
                raise ParseError(lineno, "expected: equal <path> = <path>")
            left, right = (s.strip() for s in body.split("="))
            paths = []
            for side in (left, right):
                parts = side.split(".")
                if not side or any(not valid_name(s) for s in parts):
                    raise ParseError(lineno, f"malformed path {side!r}")
                paths.append(tuple(parts))
            p.equal(paths[0], paths[1])
        elif kw == "option":
            if len(toks) != 2:
                raise ParseError(lineno, "expected: option <name>")
            if toks[1] == "posetal":
                p.posetal = True
            elif toks[1] == "no_auto_bound":
                p.auto_bound = False
            else:
                raise ParseError(lineno, f"unknown option {toks[1]!r}")
        else:
            raise ParseError(lineno, f"unknown directive {kw!r}")
    return p


def parse_category(text: str) -> Category:
    return build_category(parse_presentation(text))


def load_category(path: str) -> Category:
    if path == "-":
        import sys
        return parse_category(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_category(fh.read())


def dump_presentation(p: Presentation) -> str:
    lines = []
    for o in p.objects:
        tail = f" sign {sign_str(o.sign)}" if o.sign is not None else ""
        lines.append(f"object {o.name} rank {o.rank}{tail}")
    for a in p.arrows:
        tail = f" sign {sign_str(a.sign)}" if a.sign is not None else ""
        lines.append(f"arrow {a.name} : {a.source} -> {a.target}{tail}")
    for left, right in p.relations:
        lines.append(f"equal {'.'.join(left)} = {'.'.join(right)}")
    if p.posetal:
        lines.append("option posetal")
    if not p.auto_bound:
        lines.append("option no_auto_bound")
    return "\n".join(lines) + "\n"


def category_presentation(c: Category) -> Presentation:
    """A presentation whose closure is isomorphic to ``c``.

    Generators are the nondecomposable morphisms; every pair of distinct
    generator paths with the same composite is recorded as an equation, or the
    whole thing is marked posetal when ``c`` is thin.  Bounds are renamed to
    the reserved names and bounding is switched off.
    """
    names = list(c.object_names)
    if c.initial is not None:
        names[c.initial] = NULL
    if c.terminal is not None:
        names[c.terminal] = UNIVERSE
    p = Presentation(auto_bound=False, posetal=c.is_thin())
    for x in c.objects:
        sign = c.point_sign(x) if c.ranks[x] == 0 and x not in (c.initial, c.terminal) else None
        p.object(names[x], c.ranks[x], sign)
    gens = sorted(c.nondecomposable, key=lambda m: (c.sources[m], c.targets[m], c.names[m]))
    for m in gens:
        p.arrow(c.names[m], names[c.sources[m]], names[c.targets[m]], c.signs[m])
    if p.posetal:
        return p
    # all generator paths, grouped by composite
    out_gens: dict[int, list[int]] = defaultdict(list)
    for m in gens:
        out_gens[c.sources[m]].append(m)
    by_mor: dict[int, list[tuple[str, ...]]] = defaultdict(list)
    for x in c.objects:
        stack: list[tuple[tuple[int, ...], int]] = [((), c.identities[x])]
        while stack:
            seq, comp = stack.pop()
            if seq:
                by_mor[comp].append(tuple(c.names[m] for m in seq))
            for g in out_gens[c.targets[comp]]:
                stack.append((seq + (g,), c.compose(g, comp)))
    for m in sorted(by_mor, key=lambda m: (c.sources[m], c.targets[m], c.names[m])):
        paths = sorted(by_mor[m], key=lambda s: (len(s), s))
        for other in paths[1:]:
            p.equal(paths[0], other)
    return p


def dump_category(c: Category) -> str:
    return dump_presentation(category_presentation(c))
