"""
Readers for the graph input formats.
"""

from .edge_list_parser import format_edge_list, parse_edge_list
from .matrix_parser import parse_adjacency_matrix_csv
from .social_graph_parser import NodeMetadata, SocialGraphDocument, parse_social_graph_json

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "parse_adjacency_matrix_csv",
    "parse_social_graph_json",
    "SocialGraphDocument",
    "NodeMetadata",
]
