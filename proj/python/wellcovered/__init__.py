"""Well-coveredness of graphs and their Cartesian products.

Vertex sets are plain sorted lists of ints. Product vertex (g, h) has index
g * H.order + h.
"""

import json as _json

from ._wellcovered import (
    CapExceeded,
    Error,
    Graph,
    InputError,
    PreconditionError,
    canonical_form,
    cartesian_product,
    check_disjoint_sets,
    clique_remainder,
    diagonal_set,
    from_graph6,
    generate_all_graphs,
    greedy_decomposition,
    independence_number,
    is_independent,
    is_maximal_independent,
    is_well_covered,
    isolatable_vertices,
    maximal_independent_sets,
    product_witness,
    to_graph6,
)
from . import _wellcovered


def analyze(g, cap=36):
    """Full JSON report for one graph, as a dict."""
    return _json.loads(_wellcovered.analyze(g, cap))


def verify_pair(g, h, cap=36):
    """Enumerate G, H and G x H and check the product theorem."""
    return _json.loads(_wellcovered.verify_pair(g, h, cap))


def scan(max_n=5, product_cap=30, gen_up_to=5, corpus=(), connected_only=False, jobs=1):
    return _json.loads(
        _wellcovered.scan(max_n, product_cap, gen_up_to, list(corpus), connected_only, jobs)
    )


__all__ = [name for name in dir() if not name.startswith("_")]
