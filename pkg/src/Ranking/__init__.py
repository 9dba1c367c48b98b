"""
Ranking algorithms for linkrank.

InDegree, PageRank, HITS, SALSA and HubAvg, all pure functions of
(graph, RankingConfig).
"""

from .Hits import hits, hubavg
from .InDegree import indegree_scores
from .Models import HubAuthScores, SalsaMatrices, ScoreVector
from .Normalization import ensure_converged, normalize, top_ranked
from .PageRank import pagerank
from .Salsa import build_salsa_matrices, salsa

__all__ = [
    "ScoreVector",
    "HubAuthScores",
    "SalsaMatrices",
    "indegree_scores",
    "pagerank",
    "hits",
    "hubavg",
    "build_salsa_matrices",
    "salsa",
    "normalize",
    "top_ranked",
    "ensure_converged",
]
