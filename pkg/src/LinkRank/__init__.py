"""
linkrank input/output layer: parsers, generators, the run service and the CLI.
"""

from .Generators import GraphModel, generate, parse_params
from .Parser import (
    NodeMetadata,
    SocialGraphDocument,
    format_edge_list,
    parse_adjacency_matrix_csv,
    parse_edge_list,
    parse_social_graph_json,
)
from .RunService import DetectionOutcome, LoadedGraph, RunService

__all__ = [
    "GraphModel",
    "generate",
    "parse_params",
    "NodeMetadata",
    "SocialGraphDocument",
    "format_edge_list",
    "parse_adjacency_matrix_csv",
    "parse_edge_list",
    "parse_social_graph_json",
    "DetectionOutcome",
    "LoadedGraph",
    "RunService",
]
