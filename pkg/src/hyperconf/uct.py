"""Upper clique transversals: the k-UCT decision and a brute-force oracle.

``k_uct(g, k)`` asks whether ``g`` has a minimal clique transversal of size at
least ``k``. It works through the hypergraph of small minimal clique
transversals and a dual-conformality test on it, so the cost is polynomial
for each fixed ``k``.
"""

from __future__ import annotations

from itertools import combinations

from . import guards
from .dual_conformality import decide_restricted, dual_cooccurrence
from .dualize import dual
from .graph import Graph, graphs_equal, is_clique_transversal_bounded, maximal_cliques
from .hypergraph import Hypergraph

ORACLE_GUARD = 12

#: Minimal clique transversals of a graph of size below some ``k``, on the
#: full vertex set of the graph. A plain :class:`Hypergraph`; vertices outside
#: every edge are allowed.
MctHypergraph = Hypergraph


def small_mcts(g: Graph, k: int) -> MctHypergraph:
    """All minimal clique transversals of ``g`` with fewer than ``k`` vertices.

    Candidates are tried by size, then lexicographically. A candidate with a
    one-smaller subset that is already a clique transversal cannot be minimal
    and is skipped without a clique search; since transversality is
    monotone, checking those subsets is enough.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = []
    transversal = {(): g.n == 0}
    for size in range(1, min(k - 1, g.n) + 1):
        for x in combinations(range(g.n), size):
            if any(transversal[x[:i] + x[i + 1:]] for i in range(size)):
                transversal[x] = True
                continue
            ok = is_clique_transversal_bounded(g, x, bound=None)
            transversal[x] = ok
            if ok:
                edges.append(x)
    return Hypergraph(g.n, edges, _trusted=True)


def all_mcts(g: Graph) -> MctHypergraph:
    return small_mcts(g, g.n + 1)


def k_uct(g: Graph, k: int) -> tuple[bool, str]:
    """Is the upper clique transversal number of ``g`` at least ``k``?

    Returns the answer together with the route that settled it.
    """
    if k <= 1:
        return g.n >= 1, "trivial"
    h = small_mcts(g, k)
    g2 = dual_cooccurrence(h)
    if not graphs_equal(g, g2):
        return True, "cooccurrence-mismatch"
    # every maximal clique of g meets every small transversal, so the
    # restricted decider's promise holds here
    v = decide_restricted(h, g=g2)
    return not v.dually_conformal, "restricted"


def clique_hypergraph(g: Graph) -> Hypergraph:
    """Hypergraph whose edges are the maximal cliques of ``g``."""
    return Hypergraph(g.n, sorted(maximal_cliques(g)), _trusted=True)


def tau_c_plus_oracle(g: Graph, *, force: bool = False) -> int:
    """Largest minimal clique transversal, by dualizing the clique hypergraph."""
    guards.check("vertex count", g.n, ORACLE_GUARD, force)
    if g.n == 0:
        return 0
    return dual(clique_hypergraph(g), force=True).dimension()


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2
