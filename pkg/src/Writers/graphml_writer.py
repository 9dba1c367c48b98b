"""
GraphML export through networkx.
"""

import logging
from typing import Optional, Sequence

import networkx as nx

from Community import Community
from Configuration import ExportConfig
from Graph import DirectedGraph

from .membership import community_membership

logger = logging.getLogger(__name__)


def to_networkx(g: DirectedGraph, communities: Optional[Sequence[Community]] = None) -> nx.DiGraph:
    """
    Copy g into a networkx DiGraph keyed by node index.

    Every node carries its label; community pages and members also carry
    `community` (comma-separated community positions) and `role`.
    """
    belongs, pages = community_membership(communities or ())
    graph = nx.DiGraph(name=ExportConfig.DOT_GRAPH_NAME)
    for i, label in enumerate(g.labels):
        attrs = {ExportConfig.GRAPHML_LABEL_ATTR: label}
        if i in belongs:
            attrs[ExportConfig.GRAPHML_COMMUNITY_ATTR] = ",".join(str(p) for p in belongs[i])
            attrs[ExportConfig.GRAPHML_ROLE_ATTR] = (
                ExportConfig.ROLE_PAGE if i in pages else ExportConfig.ROLE_MEMBER
            )
        graph.add_node(f"n{i}", **attrs)
    graph.add_edges_from((f"n{i}", f"n{j}") for i, j in g.edges())
    return graph


def export_graphml(g: DirectedGraph, communities: Optional[Sequence[Community]] = None) -> str:
    """Render g as GraphML text."""
    graph = to_networkx(g, communities)
    text = "\n".join(nx.generate_graphml(graph, encoding="utf-8", prettyprint=True))
    logger.debug(f"GraphML export: {graph.number_of_nodes()} nodes")
    return text + "\n"
