"""Co-occurrence graphs and conformality tests."""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .graph import Graph, maximal_cliques
from .hypergraph import Hypergraph, VertexSet, mask_of, members


@dataclass(frozen=True)
class ConformalityWitness:
    """Why a hypergraph is not conformal.

    Either ``triple`` holds edge ids ``i <= j <= k`` whose pairwise
    intersections have union ``pair_union`` contained in no edge, or
    ``uncovered`` names a vertex lying in no edge at all (a singleton set
    whose pairs are trivially covered but which itself is not).
    """

    triple: tuple[int, int, int] | None
    pair_union: VertexSet
    uncovered: int | None = None


def co_occurrence(h: Hypergraph) -> Graph:
    nbr = [0] * h.n
    for e in h.edge_masks:
        for v in members(e):
            nbr[v] |= e
    return Graph.from_masks(h.n, [m & ~(1 << v) for v, m in enumerate(nbr)])


def _pair_union(h: Hypergraph, i: int, j: int, k: int) -> int:
    a, b, c = h.edge_masks[i], h.edge_masks[j], h.edge_masks[k]
    return (a & b) | (a & c) | (b & c)


def is_conformal(h: Hypergraph) -> tuple[bool, ConformalityWitness | None]:
    """Gilmore's test over all index triples ``i <= j <= k``.

    A vertex outside every edge makes the hypergraph non-conformal outright;
    on covering hypergraphs this is exactly the triple condition.
    """
    covered = 0
    for e in h.edge_masks:
        covered |= e
    missing = ((1 << h.n) - 1) & ~covered
    if missing:
        v = (missing & -missing).bit_length() - 1
        return False, ConformalityWitness(None, (v,), v)
    t = kernels.gilmore_violation(h)
    if t is None:
        return True, None
    return False, ConformalityWitness(tuple(t), members(_pair_union(h, *t)))


def violates_gilmore(h: Hypergraph, w: ConformalityWitness) -> bool:
    """Re-check a witness from scratch."""
    if w.uncovered is not None:
        return all(not e >> w.uncovered & 1 for e in h.edge_masks)
    s = _pair_union(h, *w.triple)
    return members(s) == tuple(w.pair_union) and not any(s & f == s for f in h.edge_masks)


def conformal_via_cliques(h: Hypergraph) -> bool:
    """Every maximal clique of the co-occurrence graph must be a maximal edge."""
    masks = h.edge_masks
    maximal = {e for e in masks if not any(f != e and e & f == e for f in masks)}
    g = co_occurrence(h)
    return all(mask_of(c) in maximal for c in maximal_cliques(g))
