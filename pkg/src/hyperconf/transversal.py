"""Transversals, minimal transversals and subtransversals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _pykernels as codes
from . import guards
from ._backend import kernels
from .hypergraph import Hypergraph, VertexSet, checked_mask, members

#: Largest ``|S|`` accepted without ``force``; the search is ``Δ^|S|``.
SUBTRANSVERSAL_GUARD = 12


@dataclass(frozen=True)
class SubtransversalWitness:
    """Edges ``selection[v]`` with ``e_v ∩ S = {v}`` whose union minus ``S``
    contains no edge of the hypergraph."""

    s: VertexSet
    selection: dict[int, int]  # vertex -> edge id
    uncovered_union: VertexSet


def is_transversal(h: Hypergraph, t: Iterable[int]) -> bool:
    tm = checked_mask(h.n, t)
    return all(e & tm for e in h.edge_masks)


def is_minimal_transversal(h: Hypergraph, t: Iterable[int]) -> bool:
    tm = checked_mask(h.n, t)
    masks = h.edge_masks
    if not all(e & tm for e in masks):
        return False
    # every v in t needs a private edge: e ∩ t = {v}
    private = 0
    for e in masks:
        hit = e & tm
        if not hit & (hit - 1):
            private |= hit
    return private == tm


def partition_by_trace(h: Hypergraph, s: Iterable[int]) -> tuple[dict[int, list[int]], list[int]]:
    """Split edge ids into ``E_v(S)`` (trace exactly ``{v}``) and ``E_omega(S)``
    (disjoint from ``S``); edges meeting ``S`` twice are dropped."""
    sm = checked_mask(h.n, s)
    fams: dict[int, list[int]] = {v: [] for v in members(sm)}
    omega = []
    for i, e in enumerate(h.edge_masks):
        hit = e & sm
        if not hit:
            omega.append(i)
        elif not hit & (hit - 1):
            fams[hit.bit_length() - 1].append(i)
    return fams, omega


def is_subtransversal(h: Hypergraph, s: Iterable[int], *,
                      force: bool = False) -> tuple[bool, SubtransversalWitness | None]:
    """Decide whether ``s`` lies in some minimal transversal of ``h``.

    Rejects outright when ``|s| > m`` or some ``E_v(s)`` is empty; otherwise
    searches selections ``(e_v)`` lexicographically in edge order and returns
    the first one whose union (minus ``s``) contains no edge disjoint from
    ``s``. When no edge is disjoint from ``s`` the first selection is returned.
    """
    sm = checked_mask(h.n, s)
    sv = members(sm)
    guards.check("|S|", len(sv), SUBTRANSVERSAL_GUARD, force)
    status, sel = kernels.subtransversal(h, sv)
    if status not in (codes.ACCEPT, codes.MINIMAL):
        return False, None
    union = 0
    for i in sel:
        union |= h.edge_masks[i]
    return True, SubtransversalWitness(sv, dict(zip(sv, sel)), members(union & ~sm))


def validate_witness(h: Hypergraph, w: SubtransversalWitness) -> bool:
    """Independent re-check of a witness against its defining invariants."""
    sm = checked_mask(h.n, w.s)
    if set(w.selection) != set(w.s):
        return False
    union = 0
    for v, i in w.selection.items():
        if not (0 <= i < h.m):
            return False
        if h.edge_masks[i] & sm != 1 << v:
            return False
        union |= h.edge_masks[i]
    rest = union & ~sm
    if members(rest) != tuple(w.uncovered_union):
        return False
    return not any(e & rest == e for e in h.edge_masks)


def greedy_minimal_transversal(h: Hypergraph, t: Iterable[int]) -> VertexSet:
    """Shrink a transversal to a minimal one, dropping vertices in id order."""
    tm = checked_mask(h.n, t)
    masks = h.edge_masks
    if not all(e & tm for e in masks):
        raise ValueError("not a transversal")
    for v in members(tm):
        trial = tm & ~(1 << v)
        if all(e & trial for e in masks):
            tm = trial
    return members(tm)
