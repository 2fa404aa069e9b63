"""Exact chromatic symmetric functions and tree polynomials of
vertex-weighted graphs.

Symmetric functions are dicts mapping partition tuples to
``fractions.Fraction``; polynomials are coefficient lists with the constant
term first.
"""

from ._core import (
    Graph,
    WeightedGraph,
    bcc_members,
    chromatic_poly,
    collapse,
    complete_graph,
    contract_edge,
    csf,
    cutset_forest_pairs,
    cycle_graph,
    delete_edge,
    maximal_members,
    mobius_substitute,
    partitions_of,
    path_graph,
    signed_forest_colouring_eval,
    star_graph,
    tree_poly,
    verify,
)

__all__ = [
    "Graph",
    "WeightedGraph",
    "bcc_members",
    "chromatic_poly",
    "collapse",
    "complete_graph",
    "contract_edge",
    "csf",
    "cutset_forest_pairs",
    "cycle_graph",
    "delete_edge",
    "maximal_members",
    "mobius_substitute",
    "partitions_of",
    "path_graph",
    "signed_forest_colouring_eval",
    "star_graph",
    "tree_poly",
    "verify",
]
