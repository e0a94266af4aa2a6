"""Exact duality computations at desk scale.

Four families of exceptional structures, each executable and exactly
checkable: planar/surface graph duality and Euler characteristics,
simplicial complexes with Betti numbers, matroid duality with minors and
classification, and hypercomplex algebras with generalized cross
products.  All arithmetic is exact (integers, GF(2), rationals).
"""

from .algebras import (
    Chirotope,
    CrossProductCase,
    HypercomplexAlgebra,
    cayley_dickson_algebra,
    chirotope_of_configuration,
    cross_axioms_report,
    cross_case,
    cross_product,
    division_algebra_report,
    epsilon_symbol,
    fano_octonion_algebra,
    hodge_dual,
    norm_and_conjugate,
)
from .complexes import (
    SimplicialComplex,
    betti_numbers,
    euler_char_complex,
    genus_duality_check,
    index_sum_canonical,
    is_closed_surface,
    make_complex,
    named_complex,
)
from .graphs import (
    Embedding,
    Multigraph,
    blocks,
    cycle_matroid,
    dual_embedding,
    graph_invariants,
    is_planar,
    make_graph,
    named_embedding,
    named_graph,
    platonic_solids,
    rank_nullity_duality_report,
    trace_faces,
)
from .matroids import (
    Matroid,
    check_duality_axioms,
    classify,
    direct_sum,
    has_minor,
    is_isomorphic,
    make_matroid,
    named_matroid,
    relabel,
    transversal_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "Chirotope",
    "CrossProductCase",
    "Embedding",
    "HypercomplexAlgebra",
    "Matroid",
    "Multigraph",
    "SimplicialComplex",
    "betti_numbers",
    "blocks",
    "cayley_dickson_algebra",
    "check_duality_axioms",
    "chirotope_of_configuration",
    "classify",
    "cross_axioms_report",
    "cross_case",
    "cross_product",
    "cycle_matroid",
    "direct_sum",
    "division_algebra_report",
    "dual_embedding",
    "epsilon_symbol",
    "euler_char_complex",
    "fano_octonion_algebra",
    "genus_duality_check",
    "graph_invariants",
    "has_minor",
    "hodge_dual",
    "index_sum_canonical",
    "is_closed_surface",
    "is_isomorphic",
    "is_planar",
    "make_complex",
    "make_graph",
    "make_matroid",
    "named_complex",
    "named_embedding",
    "named_graph",
    "named_matroid",
    "norm_and_conjugate",
    "platonic_solids",
    "rank_nullity_duality_report",
    "relabel",
    "trace_faces",
    "transversal_presentation",
]
