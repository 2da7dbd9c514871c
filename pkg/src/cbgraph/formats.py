"""Text formats.

Graph files: '#' comment lines and blank lines are ignored; the first data
line is "n m"; exactly m data lines "u v" follow. Vertices are 1..n,
self-loops and duplicate edges are rejected.

Hypergraph files: each data line is one hyperedge as whitespace-separated
labels; duplicate hyperedges collapse with a warning.
"""
from __future__ import annotations

import warnings
from pathlib import Path
from typing import Callable

from .graph import Graph
from .hypergraph import Hypergraph


class GraphFormatError(ValueError):
    pass


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"expected {m} edge lines, found {len(body)}"
        )
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge line must be two integers") from None
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    """Canonical form: header plus edges sorted with u < v."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def parse_hypergraph(
    text: str, on_warning: Callable[[str], None] | None = None
) -> Hypergraph:
    warn = on_warning or (lambda msg: warnings.warn(msg, stacklevel=3))
    edges: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, line in _data_lines(text):
        e = frozenset(line.split())
        if e in seen:
            warn(f"line {lineno}: duplicate hyperedge collapsed")
            continue
        seen.add(e)
        edges.append(e)
    return Hypergraph(edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    pos = {lab: i for i, lab in enumerate(h.universe)}
    lines = []
    for e in h.edges:
        lines.append(" ".join(str(lab) for lab in sorted(e, key=pos.__getitem__)))
    return "\n".join(lines) + ("\n" if lines else "")


def load_hypergraph(
    path: str | Path, on_warning: Callable[[str], None] | None = None
) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(), on_warning)
