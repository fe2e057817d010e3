from __future__ import annotations

import json
import os
import tempfile
from collections import defaultdict
from typing import Any, Optional

from .category import Category, sign_str
from .nerve import FORMAT_VERSION


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(c: Category, title: str = "incidence") -> str:
    """Hasse multigraph in DOT; objects of equal rank share a row, bottom to top."""
    lines = [f"digraph {_q(title)} {{", "  rankdir=BT;", "  node [shape=box];"]
    by_rank: dict[int, list[int]] = defaultdict(list)
    for x in c.objects:
        by_rank[c.ranks[x]].append(x)
    for r in sorted(by_rank):
        nodes = " ".join(f"{_q(c.object_names[x])};" for x in by_rank[r])
        lines.append(f"  {{ rank=same; {nodes} }}  // rank {r}")
    for m in sorted(c.nondecomposable, key=lambda m: (c.sources[m], c.targets[m], m)):
        label = c.names[m]
        s = sign_str(c.signs[m])
        if s:
            label += f" {s}"
        lines.append(f"  {_q(c.object_names[c.sources[m]])} -> {_q(c.object_names[c.targets[m]])}"
                     f" [label={_q(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def document(kind: str, **body: Any) -> dict[str, Any]:
    return {"version": FORMAT_VERSION, "kind": kind, **body}


def write_text(text: str, path: Optional[str]) -> None:
    """Write to stdout, or atomically replace ``path``."""
    if path is None or path == "-":
        import sys

        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
