"""Brute-force reference implementations.

Nothing here imports the package's algorithms: hypergraphs are plain
``(n, list_of_frozensets)`` pairs and every answer comes from enumerating
subsets directly (or from networkx for maximal cliques).
"""

from __future__ import annotations

from itertools import chain, combinations, product

import networkx as nx
import numpy as np


def subsets(universe, max_size=None):
    universe = list(universe)
    top = len(universe) if max_size is None else max_size
    return chain.from_iterable(combinations(universe, r) for r in range(top + 1))


def hits_all(t, edges):
    t = set(t)
    return all(t & e for e in edges)


def minimal_transversals(n, edges):
    """Every minimal hitting set, by checking all ``2^n`` subsets."""
    edges = [frozenset(e) for e in edges]
    out = []
    for t in subsets(range(n)):
        if hits_all(t, edges) and all(not hits_all(set(t) - {v}, edges) for v in t):
            out.append(frozenset(t))
    return out


def is_subtransversal(n, edges, s):
    s = set(s)
    return any(s <= t for t in minimal_transversals(n, edges))


def maximal_cliques(n, pairs):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(pairs)
    return [frozenset(c) for c in nx.find_cliques(g)]


def cooccurrence_pairs(edges):
    return {frozenset(p) for e in edges for p in combinations(sorted(e), 2)}


def is_conformal(n, edges):
    """Every vertex set whose pairs all co-occur must lie in some edge."""
    edges = [frozenset(e) for e in edges]
    pairs = cooccurrence_pairs(edges)
    covered = set().union(*edges) if edges else set()
    if len(covered) < n:
        return False
    for c in maximal_cliques(n, [tuple(p) for p in pairs]):
        if not any(c <= e for e in edges):
            return False
    return True


def is_dually_conformal(n, edges):
    return is_conformal(n, minimal_transversals(n, edges))


def sperner_families(n):
    """All Sperner families of non-empty subsets of ``range(n)`` (as tuples of tuples)."""
    cands = [frozenset(s) for s in subsets(range(n)) if s]
    cands.sort(key=lambda s: (len(s), sorted(s)))
    out = []

    def rec(i, chosen):
        out.append(tuple(tuple(sorted(e)) for e in chosen))
        for j in range(i, len(cands)):
            c = cands[j]
            if all(not (a <= c or c <= a) for a in chosen):
                chosen.append(c)
                rec(j + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def upper_clique_transversal_number(n, pairs):
    """Largest minimal clique transversal, over all vertex subsets."""
    if n == 0:
        return 0
    cliques = maximal_cliques(n, pairs)
    return max(len(t) for t in minimal_transversals(n, cliques))


def twosat_brute(num_vars, clauses):
    for bits in product((False, True), repeat=num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return list(bits)
    return None


def twosat_brute_fast(num_vars, clauses):
    """Exhaustive search over all ``2^num_vars`` assignments at once (numpy)."""
    rows = np.arange(1 << num_vars, dtype=np.uint32)
    ok = np.ones(rows.shape, dtype=bool)
    for c in clauses:
        sat = np.zeros(rows.shape, dtype=bool)
        for lit in c:
            bit = (rows >> (abs(lit) - 1)) & 1
            sat |= bit.astype(bool) if lit > 0 else ~bit.astype(bool)
        ok &= sat
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    a = int(hits[0])
    return [bool(a >> i & 1) for i in range(num_vars)]
