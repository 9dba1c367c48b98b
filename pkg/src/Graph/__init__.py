"""
Graph core for linkrank.

This module provides the immutable simple directed graph that every ranking and
detection step reads.
"""

from .DirectedGraph import (
    BuildInfo,
    DirectedGraph,
    from_adjacency_matrix,
    from_edge_list,
    in_degree,
    in_neighbors,
    out_degree,
    out_neighbors,
)

__all__ = [
    "BuildInfo",
    "DirectedGraph",
    "from_edge_list",
    "from_adjacency_matrix",
    "in_neighbors",
    "out_neighbors",
    "in_degree",
    "out_degree",
]
