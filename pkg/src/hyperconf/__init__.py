"""Conformality and dual conformality of hypergraphs, plus upper clique transversals.

Vertices are ``0..n-1`` internally; files and printed output use 1-based ids.
"""

from ._backend import NAME as BACKEND
from .conformality import ConformalityWitness, co_occurrence, conformal_via_cliques, is_conformal
from .dual_conformality import (
    Certificate,
    CertificateError,
    CertificateKind,
    DimensionError,
    Verdict,
    condition_a,
    decide,
    decide_2uniform,
    decide_bounded_dim,
    decide_dim3,
    decide_general,
    decide_restricted,
    dual_cooccurrence,
    verify_certificate,
)
from .dualize import canonical, check_involution, dual
from .generators import c5, ex33, ex34, ex35, gurvich_makino, random_hypergraph
from .graph import (
    Graph,
    GraphError,
    enumerate_maximal_cliques,
    graphs_equal,
    is_clique_transversal_bounded,
    is_maximal_clique,
    is_minimal_clique_transversal_bounded,
    maximal_cliques,
    universal_vertices,
)
from .guards import GuardExceeded
from .hypergraph import Hypergraph, HypergraphError, build, from_one_based, sperner_reduce, stats
from .io import ParseError, emit_graph, emit_hg, parse_graph, parse_hg
from .transversal import (
    SubtransversalWitness,
    is_minimal_transversal,
    is_subtransversal,
    is_transversal,
    partition_by_trace,
)
from .twosat import twosat_solve
from .uct import is_complete, k_uct, small_mcts, tau_c_plus_oracle

__version__ = "0.1.0"
