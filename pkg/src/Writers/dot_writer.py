"""
Graphviz DOT export.
"""

import logging
import re
from typing import List, Optional, Sequence

from Community import Community
from Configuration import ExportConfig, RegularExpressions
from Graph import DirectedGraph

from .membership import community_membership

logger = logging.getLogger(__name__)

_ESCAPE = re.compile(RegularExpressions.DOT_ESCAPE_REGEX)


def _quote(label: str) -> str:
    return '"' + _ESCAPE.sub(r"\\\1", label).replace("\n", "\\n") + '"'


def export_dot(g: DirectedGraph, communities: Optional[Sequence[Community]] = None) -> str:
    """
    Render g as a DOT digraph.

    Each community gets one fill colour (cycled from ExportConfig.DOT_PALETTE),
    shared by its page and its members. Pages are double-bordered; nodes in
    several communities take their first community's colour and a thick border.
    Every edge is one `->` statement.
    """
    belongs, pages = community_membership(communities or ())
    palette = ExportConfig.DOT_PALETTE

    lines: List[str] = [f"digraph {_quote(ExportConfig.DOT_GRAPH_NAME)} {{"]
    for i, label in enumerate(g.labels):
        attrs: List[str] = []
        positions = belongs.get(i)
        if positions:
            colour = palette[positions[0] % len(palette)]
            attrs.append(f'style=filled, fillcolor="{colour}"')
            attrs.append(f'community="{",".join(str(p) for p in positions)}"')
            if i in pages:
                attrs.append(f"peripheries={ExportConfig.DOT_PAGE_PERIPHERIES}")
            if len(positions) > 1:
                attrs.append(f"penwidth={ExportConfig.DOT_MULTI_MEMBER_PENWIDTH}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(label)}{suffix};")

    labels = g.labels
    for i, j in g.edges():
        lines.append(f"  {_quote(labels[i])} -> {_quote(labels[j])};")
    lines.append("}")

    logger.debug(f"DOT export: {g.n} nodes, {g.m} edges, {len(communities or ())} communities")
    return "\n".join(lines) + "\n"
