"""Named fixtures and seeded random instances."""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .hypergraph import Hypergraph, from_one_based


def c5() -> Hypergraph:
    """The 5-cycle as a 2-uniform hypergraph."""
    return from_one_based(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


def ex33() -> Hypergraph:
    """A triangle with pendant edges and a far triple: a non-transversal maximal clique."""
    return from_one_based(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6), (4, 5, 6)])


def ex34() -> Hypergraph:
    """``K3`` as a hypergraph; it is its own dual."""
    return from_one_based(3, [(1, 2), (1, 3), (2, 3)])


def ex35() -> Hypergraph:
    """Both kinds of certificate exist; the dual co-occurrence graph is ``K_{2,2,2}``."""
    return from_one_based(6, [(1, 4, 5), (1, 4, 6), (2, 4, 5), (2, 5, 6),
                              (3, 4, 6), (3, 5, 6), (4, 5, 6)])


FIXTURES = {"c5": c5, "ex33": ex33, "ex34": ex34, "ex35": ex35}


def gurvich_makino(d: int, k: int, l: int) -> Hypergraph:
    """``d``-uniform, non-conformal, with a dual of dimension ``k + l - (d - 1)``.

    Vertices ``0..k-1`` form the core set ``W``; every ``(d-1)``-subset of
    ``W`` receives ``l`` private extra vertices, numbered in order.
    """
    if d < 2 or k <= d or l < 1:
        raise ValueError(f"need d >= 2, k > d and l >= 1 (got d={d}, k={k}, l={l})")
    edges = list(combinations(range(k), d))
    nxt = k
    for s in combinations(range(k), d - 1):
        for _ in range(l):
            edges.append(s + (nxt,))
            nxt += 1
    return Hypergraph(nxt, edges, _trusted=True)


def gm_vertex_count(d: int, k: int, l: int) -> int:
    return k + l * comb(k, d - 1)


def random_hypergraph(n: int, m: int, k: int, seed: int) -> Hypergraph:
    """``m`` distinct non-empty edges of size at most ``k``, from ``random.Random(seed)``.

    Sizes are drawn uniformly from ``1..k``; a draw that repeats an edge is
    retried. The generator is deterministic across platforms.
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n (got k={k}, n={n})")
    if m < 0:
        raise ValueError("m must be non-negative")
    avail = sum(comb(n, i) for i in range(1, k + 1))
    if m > avail:
        raise ValueError(f"only {avail} distinct edges of size <= {k} on {n} vertices, asked for {m}")
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    edges = []
    if m > avail // 2:
        # dense request: sample directly from the full list instead of rejecting
        pool = [e for i in range(1, k + 1) for e in combinations(range(n), i)]
        edges = rng.sample(pool, m)
    else:
        while len(edges) < m:
            size = rng.randint(1, k)
            e = tuple(sorted(rng.sample(range(n), size)))
            if e not in seen:
                seen.add(e)
                edges.append(e)
    return Hypergraph(n, edges, _trusted=True)


def random_graph_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    return [(u, w) for u, w in combinations(range(n), 2) if rng.random() < p]
