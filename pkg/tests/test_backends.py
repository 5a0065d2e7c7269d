"""The compiled and pure-Python kernels must return identical results."""

from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperconf import _backend, _pykernels

from .strategies import graphs, hypergraphs

ck = pytest.importorskip("hyperconf._ckernels")


def test_backend_selection():
    assert _backend.NAME in ("cython", "python")
    assert ck.NAME == "cython" and _pykernels.NAME == "python"


@settings(max_examples=300)
@given(hypergraphs(max_n=9, max_m=12))
def test_subtransversal_identical(h):
    for r in range(4):
        for s in combinations(range(h.n), r):
            assert ck.subtransversal(h, s) == _pykernels.subtransversal(h, s)


@settings(max_examples=200)
@given(hypergraphs(max_n=10, max_m=14))
def test_cooccurrence_rows_identical(h):
    assert list(ck.dual_cooccurrence_rows(h, 0, h.n)) == list(_pykernels.dual_cooccurrence_rows(h, 0, h.n))
    mid = h.n // 2
    assert list(ck.dual_cooccurrence_rows(h, mid, h.n)) == list(_pykernels.dual_cooccurrence_rows(h, mid, h.n))


@settings(max_examples=300)
@given(hypergraphs(max_n=9, max_m=12))
def test_gilmore_identical(h):
    a, b = ck.gilmore_violation(h), _pykernels.gilmore_violation(h)
    assert (None if a is None else tuple(a)) == (None if b is None else tuple(b))


@settings(max_examples=200)
@given(graphs(max_n=9, min_n=1))
def test_undominated_clique_identical(g):
    for r in range(4):
        for x in combinations(range(g.n), r):
            a, b = ck.undominated_clique(g, x), _pykernels.undominated_clique(g, x)
            assert (None if a is None else tuple(a)) == (None if b is None else tuple(b))
