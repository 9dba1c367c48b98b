"""
Community detection: highly ranked pages without out-links and their in-neighbours.
"""

from .CommunityDetector import detect_communities, ranking_scores, score_nodes, select_communities
from .Models import Community, NodeScores, OverlapPair, OverlapReport
from .Overlap import overlap

__all__ = [
    "Community",
    "NodeScores",
    "OverlapPair",
    "OverlapReport",
    "detect_communities",
    "ranking_scores",
    "score_nodes",
    "select_communities",
    "overlap",
]
