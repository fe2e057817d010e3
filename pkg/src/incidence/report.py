from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass(frozen=True)
class Witness:
    kind: str
    ids: tuple[int, ...]
    text: str


@dataclass
class ValidationReport:
    """Outcome of one property check.  A failing report always carries a witness."""

    prop: str
    verdict: str
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    parts: list["ValidationReport"] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.verdict == FAIL and not self.witnesses:
            raise ValueError(f"{self.prop}: failing report without witnesses")
        if self.verdict == PASS and self.witnesses:
            raise ValueError(f"{self.prop}: passing report with witnesses")

    @classmethod
    def of(cls, prop: str, witnesses: Iterable[Witness], notes: Iterable[str] = (),
           parts: Iterable["ValidationReport"] = ()) -> "ValidationReport":
        ws = list(witnesses)
        return cls(prop, FAIL if ws else PASS, ws, list(notes), list(parts))

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{self.prop}: {self.verdict.upper()}"]
        for w in self.witnesses:
            lines.append(f"{pad}  - {w.text}")
        for n in self.notes:
            lines.append(f"{pad}  . {n}")
        for p in self.parts:
            lines.append(p.render(indent + 1))
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.prop,
            "verdict": self.verdict,
            "witnesses": [{"kind": w.kind, "ids": list(w.ids), "text": w.text} for w in self.witnesses],
            "notes": list(self.notes),
            "parts": [p.to_dict() for p in self.parts],
        }
