"""Shared test corpora, built once per session.

* ``exhaustive()``: every Sperner family of non-empty edges on ``n <= 5``
  vertices, covering or not (7774 instances).
* ``random_corpus()``: 2000 seeded instances on at most 9 vertices, 1500 from
  ``random_hypergraph`` reduced to their minimal edges plus 500 random graphs.
"""

from __future__ import annotations

import random
from functools import lru_cache

from hyperconf.generators import random_graph_edges, random_hypergraph
from hyperconf.hypergraph import Hypergraph, sperner_reduce

from . import oracles

EXHAUSTIVE_MAX_N = 5
RANDOM_GENERAL = 1500
RANDOM_GRAPHS = 500


@lru_cache(maxsize=None)
def exhaustive() -> tuple[Hypergraph, ...]:
    out = []
    for n in range(EXHAUSTIVE_MAX_N + 1):
        for fam in oracles.sperner_families(n):
            out.append(Hypergraph(n, list(fam)))
    return tuple(out)


@lru_cache(maxsize=None)
def random_corpus() -> tuple[Hypergraph, ...]:
    out = []
    for seed in range(RANDOM_GENERAL):
        n = 5 + seed % 5
        k = 2 + (seed // 5) % 3
        m = 3 + (seed // 15) % 10
        out.append(sperner_reduce(random_hypergraph(n, m, k, seed)))
    for seed in range(RANDOM_GRAPHS):
        rng = random.Random(10_000 + seed)
        n = rng.randint(4, 9)
        edges = random_graph_edges(n, rng.uniform(0.2, 0.8), rng)
        out.append(Hypergraph(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def full() -> tuple[Hypergraph, ...]:
    return exhaustive() + random_corpus()


@lru_cache(maxsize=None)
def brute_dual(h: Hypergraph) -> frozenset:
    return frozenset(oracles.minimal_transversals(h.n, [set(e) for e in h.edges]))
