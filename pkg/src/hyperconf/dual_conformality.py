"""Deciders for dual conformality: is the dual of ``h`` conformal?

Every decider first reduces ``h`` to its inclusion-minimal edges (the dual is
unchanged by this), builds the co-occurrence graph ``G`` of the dual from
pairwise subtransversal tests, and then looks for one of two kinds of
certificate:

* a maximal clique of ``G`` that misses some edge of ``h``;
* a clique ``C`` of ``G`` and a vertex ``v`` in ``C`` such that every edge
  through ``v`` meets ``C`` at least twice (so ``C`` can never extend to a
  minimal transversal).

A hypergraph is dually conformal exactly when neither exists.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from ._backend import kernels
from .graph import (
    Graph,
    extend_to_maximal_clique,
    graph_union_rows,
    is_maximal_clique,
    maximal_cliques,
    undominated_clique,
)
from .hypergraph import Hypergraph, VertexSet, checked_mask, mask_of, members, sperner_reduce
from .transversal import greedy_minimal_transversal, is_transversal
from .twosat import twosat_solve


class CertificateKind(str, Enum):
    NON_TRANSVERSAL_CLIQUE = "NonTransversalClique"
    NON_MINIMAL_WITNESS = "NonMinimalWitness"


class CertificateError(ValueError):
    """A certificate that is structurally malformed (not merely false)."""


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    clique: VertexSet
    vertex: int | None = None


@dataclass(frozen=True)
class Verdict:
    dually_conformal: bool
    certificate: Certificate | None
    path: str
    dual_cooccurrence: Graph = field(repr=False)
    sperner_reduced: bool = False

    def __post_init__(self):
        if self.dually_conformal == (self.certificate is not None):
            raise ValueError("a NO verdict needs a certificate and a YES verdict none")


def _workers(parallel) -> int:
    if not parallel:
        return 1
    if parallel is True:
        return max(1, os.cpu_count() or 1)
    return max(1, int(parallel))


def dual_cooccurrence(h: Hypergraph, *, parallel=False) -> Graph:
    """Co-occurrence graph of the dual: ``u ~ w`` iff ``{u, w}`` is a subtransversal.

    ``parallel`` (True or a worker count) splits the vertex rows across
    threads; the compiled kernel releases the GIL. The result does not depend
    on the split.
    """
    n = h.n
    workers = min(_workers(parallel), max(n, 1))
    if workers <= 1:
        rows = kernels.dual_cooccurrence_rows(h, 0, n)
    else:
        h.csr  # noqa: B018  build shared arrays before fanning out
        h.edge_masks  # noqa: B018
        h.vertex_edges  # noqa: B018
        bounds = _balanced_row_bounds(n, workers)
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: kernels.dual_cooccurrence_rows(h, *b), bounds))
        rows = [r for part in parts for r in part]
    return graph_union_rows(n, rows)


def _balanced_row_bounds(n: int, parts: int) -> list[tuple[int, int]]:
    # row u costs about n - u pair tests
    total = n * (n - 1) // 2
    bounds, lo, acc = [], 0, 0
    target = total / parts
    for u in range(n):
        acc += n - 1 - u
        if acc >= target * (len(bounds) + 1) and len(bounds) < parts - 1:
            bounds.append((lo, u + 1))
            lo = u + 1
    bounds.append((lo, n))
    return [b for b in bounds if b[0] < b[1]]


def _prepare(h: Hypergraph, g: Graph | None, parallel=False):
    hr = sperner_reduce(h)
    if g is None:
        g = dual_cooccurrence(hr, parallel=parallel)
    return hr, g, hr is not h


def _first_removable(hr: Hypergraph, cm: int) -> int | None:
    for v in members(cm):
        trial = cm & ~(1 << v)
        if all(e & trial for e in hr.edge_masks):
            return v
    return None


# -- general decision -------------------------------------------------------

def decide_general(h: Hypergraph, *, g: Graph | None = None, parallel=False) -> Verdict:
    """Check every maximal clique of ``G`` for being a minimal transversal.

    Exponential in the worst case (one step per maximal clique); stops at the
    first failing clique.
    """
    hr, g, reduced = _prepare(h, g, parallel)
    masks = hr.edge_masks
    for c in maximal_cliques(g):
        cm = mask_of(c)
        if not all(e & cm for e in masks):
            cert = Certificate(CertificateKind.NON_TRANSVERSAL_CLIQUE, c)
            return Verdict(False, cert, "general", g, reduced)
        v = _first_removable(hr, cm)
        if v is not None:
            cert = Certificate(CertificateKind.NON_MINIMAL_WITNESS, c, v)
            return Verdict(False, cert, "general", g, reduced)
    return Verdict(True, None, "general", g, reduced)


# -- certificates -----------------------------------------------------------

def verify_certificate(h: Hypergraph, g: Graph | None, c: Certificate) -> bool:
    """Check that ``c`` proves ``h`` is not dually conformal.

    The check runs against the inclusion-minimal edges of ``h``, which have
    the same dual. ``g`` is recomputed when ``None``.
    """
    try:
        kind = CertificateKind(c.kind)
    except ValueError as exc:
        raise CertificateError(f"unknown certificate kind {c.kind!r}") from exc
    try:
        cm = checked_mask(h.n, c.clique)
    except IndexError as exc:
        raise CertificateError(str(exc)) from exc
    if len(set(c.clique)) != len(c.clique):
        raise CertificateError("clique repeats a vertex")
    hr = sperner_reduce(h)
    if g is None:
        g = dual_cooccurrence(hr)
    if g.n != h.n:
        raise CertificateError(f"graph has {g.n} vertices, hypergraph {h.n}")
    if kind is CertificateKind.NON_TRANSVERSAL_CLIQUE:
        if c.vertex is not None and not (0 <= c.vertex < h.n):
            raise CertificateError(f"vertex {c.vertex} out of range")
        return is_maximal_clique(g, c.clique) and not all(e & cm for e in hr.edge_masks)
    if c.vertex is None:
        raise CertificateError("a non-minimality witness needs a vertex")
    if not (0 <= c.vertex < h.n):
        raise CertificateError(f"vertex {c.vertex} out of range")
    if not cm >> c.vertex & 1:
        raise CertificateError(f"vertex {c.vertex} is not in the clique")
    if not g.is_clique(c.clique):
        return False
    vbit = 1 << c.vertex
    return all((e & cm).bit_count() >= 2 for e in hr.edge_masks if e & vbit)


# -- restricted case and condition (a) --------------------------------------

def decide_restricted(h: Hypergraph, *, g: Graph | None = None, parallel=False) -> Verdict:
    """Decide under the promise that every maximal clique of ``G`` is a transversal.

    Under that promise the answer is NO exactly when some neighbourhood
    ``N_G(v)`` is a transversal. The promise is not checked; a broken promise
    gives an unreliable answer.
    """
    hr, g, reduced = _prepare(h, g, parallel)
    masks = hr.edge_masks
    for v in range(hr.n):
        nm = g.nbr_masks[v]
        if all(e & nm for e in masks):
            t = greedy_minimal_transversal(hr, members(nm))
            cert = Certificate(CertificateKind.NON_MINIMAL_WITNESS,
                               tuple(sorted(t + (v,))), v)
            return Verdict(False, cert, "restricted", g, reduced)
    return Verdict(True, None, "restricted", g, reduced)


def condition_a(h: Hypergraph, g: Graph) -> Certificate | None:
    """Find a maximal clique of ``g`` missing some edge, edge by edge.

    An edge ``e`` is missed by some maximal clique iff it is not a clique
    transversal of ``g``; the small violating clique is then grown greedily to
    a maximal one, which stays disjoint from ``e``.
    """
    hr = sperner_reduce(h)
    bound = max(hr.dimension(), 0)
    for e in hr.edges:
        small = undominated_clique(g, e, bound)
        if small is not None:
            return Certificate(CertificateKind.NON_TRANSVERSAL_CLIQUE,
                               extend_to_maximal_clique(g, small))
    return None


def decide_bounded_dim(h: Hypergraph, k: int | None = None, *, g: Graph | None = None,
                       parallel=False) -> Verdict:
    """Condition (a) via bounded clique-transversal checks, then the restricted test."""
    dim = h.dimension()
    if k is None:
        k = dim
    if dim > k:
        raise DimensionError(f"dimension {dim} exceeds k = {k}")
    hr, g, reduced = _prepare(h, g, parallel)
    cert = condition_a(hr, g)
    if cert is not None:
        return Verdict(False, cert, "dim-k", g, reduced)
    v = decide_restricted(hr, g=g)
    return Verdict(v.dually_conformal, v.certificate, "dim-k", g, reduced)


# -- dimension three --------------------------------------------------------

def dim3_vertex_clique(hr: Hypergraph, g: Graph, v: int) -> VertexSet | None:
    """Solve the 2-SAT instance for ``v``: a clique ``K`` inside ``N_G(v)`` meeting
    every edge through ``v``. Returns ``{v} ∪ K`` or ``None``."""
    nv = g.adj[v]
    nm = g.nbr_masks[v]
    pos = {u: i for i, u in enumerate(nv)}
    clauses = []
    for i in hr.vertex_edges[v]:
        inter = hr.edge_masks[i] & nm
        if not inter:
            return None
        clauses.append(tuple(pos[u] + 1 for u in members(inter)))
    mat = g.matrix
    for a, b in combinations(nv, 2):
        if not mat[a, b]:
            clauses.append((-(pos[a] + 1), -(pos[b] + 1)))
    sol = twosat_solve(len(nv), clauses)
    if sol is None:
        return None
    k = [u for u, on in zip(nv, sol) if on]
    return tuple(sorted(k + [v]))


def condition_b_dim3(h: Hypergraph, g: Graph, *, parallel=False) -> Certificate | None:
    hr = sperner_reduce(h)
    if hr.dimension() > 3:
        raise DimensionError(f"dimension {hr.dimension()} exceeds 3")
    workers = _workers(parallel)
    if workers <= 1:
        for v in range(hr.n):
            c = dim3_vertex_clique(hr, g, v)
            if c is not None:
                return Certificate(CertificateKind.NON_MINIMAL_WITNESS, c, v)
        return None
    with ThreadPoolExecutor(workers) as pool:
        found = list(pool.map(lambda v: dim3_vertex_clique(hr, g, v), range(hr.n)))
    for v, c in enumerate(found):
        if c is not None:
            return Certificate(CertificateKind.NON_MINIMAL_WITNESS, c, v)
    return None


def decide_dim3(h: Hypergraph, *, g: Graph | None = None, parallel=False) -> Verdict:
    """Condition (a), then one 2-SAT instance per vertex for condition (b)."""
    if h.dimension() > 3:
        raise DimensionError(f"dimension {h.dimension()} exceeds 3")
    hr, g, reduced = _prepare(h, g, parallel)
    cert = condition_a(hr, g) or condition_b_dim3(hr, g, parallel=parallel)
    return Verdict(cert is None, cert, "dim3", g, reduced)


# -- two-uniform ------------------------------------------------------------

def decide_2uniform(h: Hypergraph, *, g: Graph | None = None, parallel=False) -> Verdict:
    """Condition (a), then: is some closed neighbourhood ``N_h[v]`` a clique of ``G``?"""
    if not h.is_uniform(2):
        raise DimensionError("hypergraph is not 2-uniform")
    hr, g, reduced = _prepare(h, g, parallel)
    cert = condition_a(hr, g)
    if cert is None:
        for v in range(hr.n):
            closed = 1 << v
            for i in hr.vertex_edges[v]:
                closed |= hr.edge_masks[i]
            c = members(closed)
            if g.is_clique(c):
                cert = Certificate(CertificateKind.NON_MINIMAL_WITNESS, c, v)
                break
    return Verdict(cert is None, cert, "2uniform", g, reduced)


# -- dispatch ---------------------------------------------------------------

#: ``decide`` uses the bounded-dimension route while ``m * n**dim`` stays below this.
BOUNDED_DIM_BUDGET = 10**7


def decide(h: Hypergraph, *, parallel=False) -> Verdict:
    d = h.dimension()
    if h.m and h.is_uniform(2):
        return decide_2uniform(h, parallel=parallel)
    if d <= 3:
        return decide_dim3(h, parallel=parallel)
    if h.m * max(h.n, 1) ** d <= BOUNDED_DIM_BUDGET:
        return decide_bounded_dim(h, parallel=parallel)
    return decide_general(h, parallel=parallel)


PATHS = {
    "general": decide_general,
    "dim-k": decide_bounded_dim,
    "dim3": decide_dim3,
    "2uniform": decide_2uniform,
}
