"""Line-oriented poset text format and DOT export.

The text format has one declaration per line::

    # comments run to end of line
    element a
    element b
    cover a b

A file may instead name a built-in infinite poset with ``generator <name>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import BirkhoffError, ParseError
from .poset import FinitePoset, from_cover_relation, transitive_reduction


@dataclass
class PosetText:
    labels: list = field(default_factory=list)
    covers: list = field(default_factory=list)
    generator: str | None = None

    def to_poset(self) -> FinitePoset:
        if self.generator is not None:
            raise ParseError(f"file names the generator {self.generator!r}, not a finite poset")
        return from_cover_relation(self.labels, self.covers)


def parse_text(text: str) -> PosetText:
    out = PosetText()
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "element":
            if len(parts) != 2:
                raise ParseError("expected 'element <label>'", lineno)
            if parts[1] in declared:
                raise ParseError(f"duplicate element {parts[1]!r}", lineno)
            declared.add(parts[1])
            out.labels.append(parts[1])
        elif kind == "cover":
            if len(parts) != 3:
                raise ParseError("expected 'cover <lower> <upper>'", lineno)
            for lab in parts[1:]:
                if lab not in declared:
                    raise ParseError(f"cover uses undeclared element {lab!r}", lineno)
            out.covers.append((parts[1], parts[2]))
        elif kind == "generator":
            if len(parts) != 2:
                raise ParseError("expected 'generator <name>'", lineno)
            out.generator = parts[1]
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if out.generator is not None and (out.labels or out.covers):
        raise ParseError("a generator file cannot also declare elements")
    return out


def read_text(path) -> PosetText:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_text(text)


def load_poset(path) -> FinitePoset:
    return read_text(path).to_poset()


def _check_label(label):
    if not label or any(ch.isspace() for ch in label) or "#" in label:
        raise BirkhoffError(f"label {label!r} cannot be written in the text format")


def format_cover_text(labels: Iterable[str], covers: Iterable[tuple[str, str]]) -> str:
    lines = []
    for lab in labels:
        _check_label(lab)
        lines.append(f"element {lab}")
    for lo, hi in covers:
        lines.append(f"cover {lo} {hi}")
    return "\n".join(lines) + "\n"


def dumps_poset(P: FinitePoset) -> str:
    return format_cover_text(P.labels, transitive_reduction(P))


def write_poset(P: FinitePoset, path) -> None:
    Path(path).write_text(dumps_poset(P), encoding="utf-8")


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(labels: Iterable[str], edges: Iterable[tuple[str, str]], name: str = "hasse") -> str:
    """DOT digraph with one node per label and edges drawn lower to upper."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines.extend(f"  {_quote(lab)};" for lab in labels)
    lines.extend(f"  {_quote(lo)} -> {_quote(hi)};" for lo, hi in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(P: FinitePoset, name: str = "hasse") -> str:
    return to_dot(P.labels, transitive_reduction(P), name)
