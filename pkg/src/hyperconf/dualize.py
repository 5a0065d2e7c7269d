"""Exact dualization by sequential Berge multiplication.

This is the exhaustive oracle the rest of the package is checked against;
its cost is exponential, hence the vertex-count guard.
"""

from __future__ import annotations

from . import guards
from .hypergraph import Hypergraph, members

DUAL_GUARD = 20


def _minimize(family: set[int]) -> list[int]:
    kept: list[int] = []
    for t in sorted(family, key=lambda t: (t.bit_count(), t)):
        if not any(k & t == k for k in kept):
            kept.append(t)
    return kept


def minimal_transversal_masks(h: Hypergraph) -> list[int]:
    family = [0]
    for e in h.edge_masks:
        nxt = set()
        bits = [1 << v for v in members(e)]
        for t in family:
            if t & e:
                nxt.add(t)
            else:
                for b in bits:
                    nxt.add(t | b)
        family = _minimize(nxt)
    return family


def canonical_order(edges):
    return sorted(edges, key=lambda e: (len(e), e))


def dual(h: Hypergraph, *, force: bool = False) -> Hypergraph:
    """Hypergraph of all minimal transversals on the same vertex universe.

    Edges come out ordered by size, then lexicographically. With no edges the
    dual is ``{∅}``; if ``h`` has an empty edge the dual has no edges.
    """
    guards.check("vertex count", h.n, DUAL_GUARD, force)
    edges = canonical_order(members(t) for t in minimal_transversal_masks(h))
    return Hypergraph(h.n, edges, _trusted=True, allow_empty=any(not e for e in edges))


def canonical(h: Hypergraph) -> Hypergraph:
    """Same hypergraph with edges in canonical (size, lexicographic) order."""
    return Hypergraph(h.n, canonical_order(h.edges), _trusted=True, allow_empty=h.allow_empty)


def check_involution(h: Hypergraph, *, force: bool = False) -> bool:
    if not h.is_sperner():
        raise ValueError("involution holds only for Sperner hypergraphs")
    return dual(dual(h, force=force), force=force).edge_set() == h.edge_set()
