"""Hypergraph representation: sorted edge lists, an edge-vertex incidence
matrix, and doubly linked circular lists of incident pairs.

Vertices are dense 0-based integers. A vertex set is a strictly increasing
tuple of ints; the merge-based helpers below run in ``O(|a| + |b|)``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

VertexSet = tuple  # strictly increasing tuple of vertex ids


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


# -- sorted-set arithmetic ---------------------------------------------------

def union(a: Sequence[int], b: Sequence[int]) -> VertexSet:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            out.append(y)
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def intersection(a: Sequence[int], b: Sequence[int]) -> VertexSet:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x < y:
            i += 1
        elif y < x:
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    return tuple(out)


def difference(a: Sequence[int], b: Sequence[int]) -> VertexSet:
    """Return ``a \\ b``."""
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la:
        if j >= lb:
            out.extend(a[i:])
            break
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            j += 1
        else:
            i += 1
            j += 1
    return tuple(out)


def is_subset(a: Sequence[int], b: Sequence[int]) -> bool:
    """Return whether ``a ⊆ b``; stops at the first element of ``a`` not in ``b``."""
    if len(a) > len(b):
        return False
    j = 0
    lb = len(b)
    for x in a:
        while j < lb and b[j] < x:
            j += 1
        if j == lb or b[j] != x:
            return False
        j += 1
    return True


def set_ops(a: Sequence[int], b: Sequence[int]) -> dict:
    """All five binary operations on two sorted vertex sets at once."""
    return {
        "union": union(a, b),
        "intersection": intersection(a, b),
        "a_minus_b": difference(a, b),
        "b_minus_a": difference(b, a),
        "a_subset_b": is_subset(a, b),
    }


def canonical(vertices: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(vertices)))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# -- incident-pair lists -----------------------------------------------------

class IncidencePairs:
    """Doubly linked circular lists of incident pairs.

    Node ids ``0..m-1`` are the edge list heads, ``m..m+n-1`` the vertex list
    heads, and ``m+n+r`` is incident-pair record ``r``. Every node carries
    horizontal and vertical ``prev``/``next`` links; records also point to
    their vertex and edge.
    """

    __slots__ = ("n", "m", "vertex", "edge", "h_prev", "h_next", "v_prev", "v_next")

    def __init__(self, n: int, m: int, edges: Sequence[VertexSet]):
        self.n = n
        self.m = m
        total = m + n + sum(len(e) for e in edges)
        nodes = list(range(total))
        self.h_prev = nodes[:]
        self.h_next = nodes[:]
        self.v_prev = nodes[:]
        self.v_next = nodes[:]
        self.vertex = [-1] * total
        self.edge = [-1] * total
        rec = m + n
        h_prev, h_next, v_prev, v_next = self.h_prev, self.h_next, self.v_prev, self.v_next
        # Row-by-row insertion at the tail of both circular lists.
        for e, verts in enumerate(edges):
            for v in verts:
                self.vertex[rec] = v
                self.edge[rec] = e
                tail = h_prev[e]
                h_next[tail] = rec
                h_prev[rec] = tail
                h_next[rec] = e
                h_prev[e] = rec
                head = m + v
                tail = v_prev[head]
                v_next[tail] = rec
                v_prev[rec] = tail
                v_next[rec] = head
                v_prev[head] = rec
                rec += 1

    def edge_vertices(self, e: int) -> Iterator[int]:
        node = self.h_next[e]
        while node != e:
            yield self.vertex[node]
            node = self.h_next[node]

    def vertex_edges(self, v: int) -> Iterator[int]:
        head = self.m + v
        node = self.v_next[head]
        while node != head:
            yield self.edge[node]
            node = self.v_next[node]


# -- the hypergraph ----------------------------------------------------------

class Hypergraph:
    """Immutable hypergraph on vertices ``0..n-1`` with an ordered edge list.

    ``covering`` reports whether every vertex lies in some hyperedge; derived
    hypergraphs (duals, small clique-transversal families) may be non-covering.
    """

    def __init__(self, n: int, edges: Sequence[VertexSet], *, _trusted: bool = False,
                 allow_empty: bool = False):
        if not _trusted:
            edges = _validate(n, edges, allow_empty)
        self.n = n
        self.edges: tuple[VertexSet, ...] = tuple(edges)
        self.m = len(self.edges)
        self.allow_empty = allow_empty or any(len(e) == 0 for e in self.edges)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(str(v + 1) for v in e) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @cached_property
    def incidence(self) -> np.ndarray:
        """``m x n`` uint8 matrix with ``incidence[e, v] == 1`` iff ``v`` in edge ``e``."""
        mat = np.zeros((self.m, self.n), dtype=np.uint8)
        if self.m:
            rows = np.repeat(np.arange(self.m), [len(e) for e in self.edges])
            cols = np.fromiter((v for e in self.edges for v in e), dtype=np.intp,
                               count=len(rows))
            mat[rows, cols] = 1
        return mat

    @cached_property
    def pairs(self) -> IncidencePairs:
        return IncidencePairs(self.n, self.m, self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ids of the edges containing it, in edge order."""
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                lists[v].append(i)
        return tuple(tuple(x) for x in lists)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Compressed edge->vertex and vertex->edge arrays for the compiled kernels."""
        eptr = np.zeros(self.m + 1, dtype=np.int32)
        eptr[1:] = np.cumsum([len(e) for e in self.edges], dtype=np.int64)
        eidx = np.fromiter((v for e in self.edges for v in e), dtype=np.int32,
                           count=int(eptr[-1]))
        vptr = np.zeros(self.n + 1, dtype=np.int32)
        vptr[1:] = np.cumsum([len(x) for x in self.vertex_edges], dtype=np.int64)
        vedge = np.fromiter((i for x in self.vertex_edges for i in x), dtype=np.int32,
                            count=int(vptr[-1]))
        return eptr, eidx, vptr, vedge

    def degree(self, v: int) -> int:
        return len(self.vertex_edges[v])

    def dimension(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def max_degree(self) -> int:
        return max((len(x) for x in self.vertex_edges), default=0)

    @property
    def covering(self) -> bool:
        return all(self.vertex_edges[v] for v in range(self.n))

    def is_uniform(self, k: int) -> bool:
        return all(len(e) == k for e in self.edges)

    def is_sperner(self) -> bool:
        masks = self.edge_masks
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a & b == a:
                    return False
        return True

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)


def _validate(n: int, edges: Sequence[Iterable[int]], allow_empty: bool) -> list[VertexSet]:
    if n < 0:
        raise HypergraphError(f"vertex count must be nonnegative, got {n}")
    out = []
    seen = {}
    for i, raw in enumerate(edges):
        raw = list(raw)
        e = tuple(sorted(raw))
        if len(set(e)) != len(e):
            raise HypergraphError(f"edge {i} repeats a vertex: {raw}")
        for v in e:
            if not (0 <= v < n):
                raise HypergraphError(f"edge {i}: vertex id {v} out of range [0, {n})")
        if not e and not allow_empty:
            raise HypergraphError(f"edge {i} is empty (pass allow_empty=True for degenerate mode)")
        if e in seen:
            raise HypergraphError(f"edge {i} duplicates edge {seen[e]}")
        seen[e] = i
        out.append(e)
    return out


def build(n: int, raw_edges: Iterable[Iterable[int]], *, allow_empty: bool = False) -> Hypergraph:
    """Build a hypergraph from 0-based edge lists and its incidence structures."""
    h = Hypergraph(n, list(raw_edges), allow_empty=allow_empty)
    h.incidence  # noqa: B018  materialise both representations eagerly
    h.pairs  # noqa: B018
    return h


def from_one_based(n: int, raw_edges: Iterable[Iterable[int]], **kw) -> Hypergraph:
    """Convenience constructor for the 1-based vertex labels used in files."""
    return build(n, [[v - 1 for v in e] for e in raw_edges], **kw)


def incident(h: Hypergraph, v: int, e: int) -> bool:
    if not (0 <= v < h.n) or not (0 <= e < h.m):
        raise IndexError(f"incident({v}, {e}) out of range for n={h.n}, m={h.m}")
    return bool(h.incidence[e, v])


def sperner_reduce(h: Hypergraph) -> Hypergraph:
    """Keep only inclusion-minimal edges, preserving their relative order."""
    masks = h.edge_masks
    keep = []
    for i, a in enumerate(masks):
        if not any(j != i and b & a == b and b != a for j, b in enumerate(masks)):
            keep.append(h.edges[i])
    if len(keep) == h.m:
        return h
    return Hypergraph(h.n, keep, _trusted=True, allow_empty=h.allow_empty)


def stats(h: Hypergraph) -> tuple[int, int, int, int]:
    """``(dimension, max_degree, n, m)``."""
    return h.dimension(), h.max_degree(), h.n, h.m


def checked_mask(n: int, vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        if not (0 <= v < n):
            raise IndexError(f"vertex id {v} out of range [0, {n})")
        m |= 1 << v
    return m
