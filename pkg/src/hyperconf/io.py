"""Text formats with 1-based vertex ids.

Hypergraph files::

    # comment
    p hg <n> <m>
    e v1 v2 ... vk

Graph files (DIMACS-like)::

    c comment
    p edge <n> <m>
    e u v
"""

from __future__ import annotations

from .graph import Graph, GraphError
from .hypergraph import Hypergraph, HypergraphError, build


class ParseError(ValueError):
    def __init__(self, line: int | None, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("utf-8")
    return data


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from exc


def _records(data, comment: str, kind: str):
    """Yield ``(lineno, n, m)`` for the header, then ``(lineno, ids)`` per body line."""
    header = None
    for lineno, raw in enumerate(_text(data).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise ParseError(lineno, "second header line")
            if len(tok) != 4 or tok[1] != kind:
                raise ParseError(lineno, f"malformed header, expected 'p {kind} <n> <m>'")
            n, m = _ints(tok[2:], lineno)
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count in header")
            header = (n, m)
            yield lineno, header
        elif tok[0] == "e":
            if header is None:
                raise ParseError(lineno, "edge line before header")
            ids = _ints(tok[1:], lineno)
            for v in ids:
                if not 1 <= v <= header[0]:
                    raise ParseError(lineno, f"id {v} out of range [1, {header[0]}]")
            yield lineno, ids
        else:
            raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if header is None:
        raise ParseError(None, f"missing 'p {kind}' header")


def parse_hg(data) -> Hypergraph:
    it = _records(data, "#", "hg")
    _, (n, m) = next(it)
    edges, lines = [], []
    for lineno, ids in it:
        if not ids:
            raise ParseError(lineno, "empty hyperedge")
        if len(set(ids)) != len(ids):
            raise ParseError(lineno, "repeated vertex in hyperedge")
        edges.append(tuple(sorted(v - 1 for v in ids)))
        lines.append(lineno)
    if len(edges) != m:
        raise ParseError(None, f"header declares {m} edges, body has {len(edges)}")
    seen = {}
    for e, lineno in zip(edges, lines):
        if e in seen:
            raise ParseError(lineno, f"duplicate hyperedge (first on line {seen[e]})")
        seen[e] = lineno
    try:
        return build(n, edges)
    except HypergraphError as exc:  # pragma: no cover - checked above
        raise ParseError(None, str(exc)) from exc


def parse_graph(data) -> Graph:
    it = _records(data, "c", "edge")
    _, (n, m) = next(it)
    edges, seen = [], {}
    for lineno, ids in it:
        if len(ids) != 2:
            raise ParseError(lineno, "edge line needs exactly two ids")
        u, w = ids[0] - 1, ids[1] - 1
        if u == w:
            raise ParseError(lineno, f"loop at vertex {ids[0]}")
        key = (min(u, w), max(u, w))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge (first on line {seen[key]})")
        seen[key] = lineno
        edges.append(key)
    if len(edges) != m:
        raise ParseError(None, f"header declares {m} edges, body has {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:  # pragma: no cover - checked above
        raise ParseError(None, str(exc)) from exc


def emit_hg(h: Hypergraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out += [f"# {c}" for c in comment.splitlines()]
    out.append(f"p hg {h.n} {h.m}")
    out += ["e " + " ".join(str(v + 1) for v in e) if e else "e" for e in h.edges]
    return "\n".join(out) + "\n"


def emit_graph(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out += [f"c {c}" for c in comment.splitlines()]
    edges = g.edges()
    out.append(f"p edge {g.n} {len(edges)}")
    out += [f"e {u + 1} {w + 1}" for u, w in edges]
    return "\n".join(out) + "\n"


def read_hg(path: str) -> Hypergraph:
    with open(path, "rb") as fh:
        return parse_hg(fh.read())


def read_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())
