"""Text formats for annotated sequences and graphs.

Annotated sequence (one instance per file):
    line 1          the sequence itself, verbatim
    following lines "i j" declaring an arc (1-based, whitespace-separated)
    '#'-prefixed and blank lines are ignored from line 2 onward

Graph (DIMACS-like):
    "c ..."         comment
    "p edge N M"    header, exactly once, before any edge line
    "e I J"         one line per edge

Writers emit a canonical form (arcs/edges sorted ascending, single spaces,
trailing newline) so write -> parse -> write is byte-identical.
"""

from __future__ import annotations

from pathlib import Path

from .core import AnnotatedSequence
from .errors import FormatError, ValidationError
from .reductions import Graph

__all__ = [
    "write_annotated_sequence",
    "parse_annotated_sequence",
    "load_annotated_sequence",
    "save_annotated_sequence",
    "write_graph",
    "parse_graph",
    "load_graph",
    "save_graph",
]


def write_annotated_sequence(a: AnnotatedSequence) -> str:
    if "\n" in a.seq or "\r" in a.seq:
        raise ValidationError("sequences containing newlines cannot be serialized")
    lines = [a.seq]
    lines.extend(f"{i} {j}" for i, j in sorted(a.arcs))
    return "\n".join(lines) + "\n"


def parse_annotated_sequence(text: str) -> AnnotatedSequence:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file; expected a sequence on line 1", line=1)
    seq = lines[0]
    arcs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'i j', got {raw!r}", line=lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer arc endpoint in {raw!r}", line=lineno)
        arcs.append((i, j))
    try:
        return AnnotatedSequence(seq, frozenset(arcs))
    except ValidationError as exc:
        raise FormatError(str(exc)) from exc


def load_annotated_sequence(path: str | Path) -> AnnotatedSequence:
    return parse_annotated_sequence(Path(path).read_text())


def save_annotated_sequence(a: AnnotatedSequence, path: str | Path) -> None:
    Path(path).write_text(write_annotated_sequence(a))


def write_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {i} {j}" for i, j in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise FormatError("duplicate 'p' header", line=lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise FormatError(f"expected 'p edge N M', got {raw!r}", line=lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"non-integer header field in {raw!r}", line=lineno)
            if n < 0 or declared_m < 0:
                raise FormatError("negative count in header", line=lineno)
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge line before 'p' header", line=lineno)
            if len(parts) != 3:
                raise FormatError(f"expected 'e I J', got {raw!r}", line=lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"non-integer endpoint in {raw!r}", line=lineno)
            if i == j:
                raise FormatError(f"loop at vertex {i}", line=lineno)
            if not (1 <= i <= n and 1 <= j <= n):
                raise FormatError(f"endpoint outside 1..{n}", line=lineno)
            edge = (min(i, j), max(i, j))
            if edge in edges:
                raise FormatError(f"duplicate edge {edge}", line=lineno)
            edges.add(edge)
        else:
            raise FormatError(f"unknown line type {parts[0]!r}", line=lineno)
    if n is None:
        raise FormatError("missing 'p edge N M' header")
    if len(edges) != declared_m:
        raise FormatError(f"header declares {declared_m} edges but file has {len(edges)}")
    return Graph(n, frozenset(edges))


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(write_graph(g))
