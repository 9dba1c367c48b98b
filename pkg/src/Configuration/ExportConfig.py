"""
Constants for DOT and GraphML exports.
"""

from typing import Tuple


class ExportConfig:
    """Styling and attribute names used by the graph writers."""

    DOT_GRAPH_NAME: str = "linkrank"
    """Name of the emitted DOT digraph."""
    DOT_PALETTE: Tuple[str, ...] = (
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    )
    """One fill colour per community, cycled when there are more communities than colours."""
    DOT_PAGE_PERIPHERIES: int = 2
    """Community pages are drawn double-bordered."""
    DOT_MULTI_MEMBER_PENWIDTH: int = 3
    """Border width for nodes that belong to two or more communities."""

    GRAPHML_LABEL_ATTR: str = "label"
    """Node attribute holding the external label."""
    GRAPHML_COMMUNITY_ATTR: str = "community"
    """Node attribute holding comma-separated community indices."""
    GRAPHML_ROLE_ATTR: str = "role"
    """Node attribute: 'page', 'member' or absent."""
    ROLE_PAGE: str = "page"
    ROLE_MEMBER: str = "member"
