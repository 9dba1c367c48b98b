"""
InDegree ranking: a node is as popular as the number of links pointing at it.
"""

import logging
from typing import Optional

import numpy as np

from Configuration import RankingConfig, RankingDefaults
from Graph import DirectedGraph

from .Models import ScoreVector
from .Normalization import normalize

logger = logging.getLogger(__name__)


def indegree_scores(g: DirectedGraph, cfg: Optional[RankingConfig] = None) -> ScoreVector:
    """
    Score each node by |B(i)|.

    Args:
        g: The graph
        cfg: Ranking configuration; only `norm` is read (default L1)

    Returns:
        A ScoreVector whose `raw` field holds the integer in-degrees
    """
    cfg = cfg or RankingConfig()
    raw = g.in_degrees().astype(np.float64)
    scores = normalize(raw, cfg.norm_or(RankingDefaults.PROBABILITY_NORM))
    logger.debug(f"InDegree computed for {g.n} nodes")
    return ScoreVector(scores=scores, iterations=1, converged=True, algorithm="indegree", raw=raw)
