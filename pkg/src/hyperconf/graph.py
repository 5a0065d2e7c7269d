"""Simple undirected graphs, maximal cliques, and clique transversals of
bounded size."""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from ._backend import kernels
from .hypergraph import VertexSet, checked_mask, mask_of, members

#: Largest set size the bounded clique-transversal checks accept by default.
DEFAULT_K_BOUND = 8


class GraphError(ValueError):
    pass


class Graph:
    """Immutable graph on ``0..n-1`` with sorted adjacency lists."""

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]], *, _trusted: bool = False):
        if not _trusted:
            adjacency = _validate_adjacency(n, adjacency)
        self.n = n
        self.adj: tuple[VertexSet, ...] = tuple(tuple(a) for a in adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], *, strict: bool = True) -> "Graph":
        """Build from an edge list; with ``strict`` a repeated edge or loop raises."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for i, (u, w) in enumerate(edges):
            if not (0 <= u < n and 0 <= w < n):
                raise GraphError(f"edge {i}: ({u}, {w}) out of range [0, {n})")
            if u == w:
                raise GraphError(f"edge {i}: loop at vertex {u}")
            if w in nbrs[u]:
                if strict:
                    raise GraphError(f"edge {i}: duplicate edge ({u}, {w})")
                continue
            nbrs[u].add(w)
            nbrs[w].add(u)
        return cls(n, [sorted(s) for s in nbrs], _trusted=True)

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        return cls(n, [members(m) for m in masks], _trusted=True)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [tuple(w for w in range(n) if w != v) for v in range(n)], _trusted=True)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [()] * n, _trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[(u + 1, w + 1) for u, w in self.edges()]})"

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in self.adj[u] if u < w]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def adjacent(self, u: int, w: int) -> bool:
        return bool(self.nbr_masks[u] >> w & 1)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(a) for a in self.adj)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense ``n x n`` uint8 adjacency matrix, built on first use."""
        mat = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, a in enumerate(self.adj):
            if a:
                mat[u, list(a)] = 1
        return mat

    def is_clique(self, c: Iterable[int]) -> bool:
        c = list(c)
        nbr = self.nbr_masks
        cm = mask_of(c)
        return all(cm & ~nbr[v] == 1 << v for v in c)


def _validate_adjacency(n, adjacency):
    if len(adjacency) != n:
        raise GraphError(f"expected {n} adjacency lists, got {len(adjacency)}")
    out = [tuple(sorted(a)) for a in adjacency]
    for v, a in enumerate(out):
        if len(set(a)) != len(a):
            raise GraphError(f"vertex {v}: repeated neighbour")
        for w in a:
            if not (0 <= w < n):
                raise GraphError(f"vertex {v}: neighbour {w} out of range")
            if w == v:
                raise GraphError(f"vertex {v}: loop")
    for v, a in enumerate(out):
        for w in a:
            if v not in out[w]:
                raise GraphError(f"adjacency not symmetric at ({v}, {w})")
    return out


# -- maximal cliques ---------------------------------------------------------

def maximal_cliques(g: Graph) -> Iterator[VertexSet]:
    """Yield every maximal clique exactly once (Bron-Kerbosch with Tomita pivoting).

    Iterative, so deep graphs do not hit the recursion limit. Stopping the
    iteration aborts the enumeration.
    """
    nbr = g.nbr_masks
    if g.n == 0:
        return
    stack = [(0, (1 << g.n) - 1, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield members(r)
            continue
        # pivot: vertex of P|X with most neighbours in P
        px = p | x
        best, best_cnt = -1, -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            px ^= low
            cnt = (p & nbr[u]).bit_count()
            if cnt > best_cnt:
                best, best_cnt = u, cnt
        branch = p & ~nbr[best]
        frames = []
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            frames.append((r | low, p & nbr[v], x & nbr[v]))
            p &= ~low
            x |= low
        stack.extend(reversed(frames))


def enumerate_maximal_cliques(g: Graph, visitor: Callable[[VertexSet], object] | None = None) -> list[VertexSet]:
    """Collect maximal cliques; a visitor returning ``False`` stops the enumeration.

    Returns the cliques seen so far (including the one that stopped it).
    """
    seen = []
    for c in maximal_cliques(g):
        seen.append(c)
        if visitor is not None and visitor(c) is False:
            break
    return seen


def is_maximal_clique(g: Graph, c: Iterable[int]) -> bool:
    cm = checked_mask(g.n, c)
    nbr = g.nbr_masks
    common = (1 << g.n) - 1
    for v in members(cm):
        if cm & ~nbr[v] != 1 << v:
            return False
        common &= nbr[v]
    return not common & ~cm


def extend_to_maximal_clique(g: Graph, c: Iterable[int]) -> VertexSet:
    """Greedily add the smallest common neighbour until the clique is maximal."""
    cm = mask_of(c)
    nbr = g.nbr_masks
    common = (1 << g.n) - 1
    for v in members(cm):
        common &= nbr[v]
    common &= ~cm
    while common:
        low = common & -common
        v = low.bit_length() - 1
        cm |= low
        common &= nbr[v]
    return members(cm)


# -- clique transversals -----------------------------------------------------

def _check_bound(x, bound):
    if bound is not None and len(x) > bound:
        raise GraphError(f"|X| = {len(x)} exceeds the bound {bound}")


def undominated_clique(g: Graph, x: Iterable[int], bound: int | None = DEFAULT_K_BOUND) -> VertexSet | None:
    """A clique of ``g - x`` with at most ``|x|`` vertices that lies in no ``N(v)``,
    ``v`` in ``x``; ``None`` when ``x`` is a clique transversal."""
    x = tuple(sorted(set(x)))
    checked_mask(g.n, x)
    _check_bound(x, bound)
    if g.n == 0:
        return None
    return kernels.undominated_clique(g, x)


def is_clique_transversal_bounded(g: Graph, x: Iterable[int], bound: int | None = DEFAULT_K_BOUND) -> bool:
    """Whether ``x`` meets every maximal clique, checked through cliques of size at most ``|x|``.

    Runs in ``O(n^|x|)``; the empty set is a clique transversal only of the
    graph with no vertices.
    """
    return undominated_clique(g, x, bound) is None


def is_minimal_clique_transversal_bounded(g: Graph, x: Iterable[int],
                                          bound: int | None = DEFAULT_K_BOUND) -> bool:
    x = tuple(sorted(set(x)))
    if not is_clique_transversal_bounded(g, x, bound):
        return False
    return all(not is_clique_transversal_bounded(g, x[:i] + x[i + 1:], bound) for i in range(len(x)))


def universal_vertices(g: Graph) -> VertexSet:
    return tuple(v for v in range(g.n) if len(g.adj[v]) == g.n - 1)


def graphs_equal(g1: Graph, g2: Graph) -> bool:
    """Compare vertex counts and sorted adjacency lists."""
    return g1.n == g2.n and g1.adj == g2.adj


def graph_union_rows(n: int, upper_rows: Sequence[Sequence[int]]) -> Graph:
    """Assemble a graph from upper-triangular neighbour rows (``w > u`` for row ``u``)."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, row in enumerate(upper_rows):
        for w in row:
            nbrs[u].append(w)
            nbrs[w].append(u)
    return Graph(n, [sorted(a) for a in nbrs], _trusted=True)
