"""
Community detection by ranking.

The pipeline ranks every node, takes the best-scored candidates, keeps those
with no outgoing links (a community page cannot link out) and at least one
incoming link, and reports each page's in-neighbours as its members.
"""

import logging
from typing import List, Optional

from Configuration import Algorithm, DetectionConfig, PhitsConfig, RankingConfig
from Graph import DirectedGraph
from Phits import phits_authority_aggregate, phits_fit
from Ranking import hits, hubavg, indegree_scores, pagerank, salsa, top_ranked
from Utils.errors import InvalidParams

from .Models import Community, NodeScores

logger = logging.getLogger(__name__)

_HUB_AUTHORITY = {Algorithm.HITS: hits, Algorithm.SALSA: salsa, Algorithm.HUBAVG: hubavg}


def score_nodes(
    g: DirectedGraph,
    algorithm: Algorithm,
    ranking: Optional[RankingConfig] = None,
    phits: Optional[PhitsConfig] = None,
) -> NodeScores:
    """
    Run one algorithm and return the vector pages are ranked on.

    InDegree and PageRank use their scores; HITS, SALSA and HubAvg use their
    authority vector; PHITS uses max over factors of P(c|z).

    Raises:
        InvalidParams: If algorithm is PHITS and no phits configuration is given
    """
    ranking = ranking or RankingConfig()
    if algorithm == Algorithm.INDEGREE:
        result = indegree_scores(g, ranking)
        return NodeScores(algorithm.value, result.scores, result.iterations, result.converged, raw=result.raw)
    if algorithm == Algorithm.PAGERANK:
        result = pagerank(g, ranking)
        return NodeScores(algorithm.value, result.scores, result.iterations, result.converged)
    if algorithm in _HUB_AUTHORITY:
        pair = _HUB_AUTHORITY[algorithm](g, ranking)
        return NodeScores(
            algorithm.value, pair.authorities, pair.iterations, pair.converged, hubs=pair.hubs
        )
    if algorithm == Algorithm.PHITS:
        if phits is None:
            raise InvalidParams("PHITS needs a factor count")
        model = phits_fit(g, phits)
        vector, winners = phits_authority_aggregate(model)
        return NodeScores(
            algorithm.value, vector.scores, vector.iterations, vector.converged, factors=winners
        )
    raise InvalidParams(f"Unknown algorithm: {algorithm}")


def ranking_scores(g: DirectedGraph, cfg: DetectionConfig) -> NodeScores:
    """The score vector a detection run with this configuration ranks on."""
    return score_nodes(g, cfg.algorithm, cfg.ranking, cfg.phits)


def select_communities(
    g: DirectedGraph,
    ranked: NodeScores,
    top_k: Optional[int] = None,
    score_threshold: Optional[float] = None,
) -> List[Community]:
    """
    Turn a score vector into community records.

    Exactly one of top_k and score_threshold must be given. top_k is capped at n;
    a threshold keeps every node scoring at or above it.
    """
    if (top_k is None) == (score_threshold is None):
        raise ValueError("exactly one of top_k and score_threshold must be set")
    if g.n == 0:
        return []

    scores = ranked.scores
    if top_k is not None:
        candidates = top_ranked(scores, min(top_k, g.n))
    else:
        order = top_ranked(scores, g.n)
        candidates = order[scores[order] >= score_threshold]

    communities: List[Community] = []
    for node in candidates:
        node = int(node)
        if g.out_degree(node) != 0 or g.in_degree(node) == 0:
            continue
        factor = int(ranked.factors[node]) if ranked.factors is not None else None
        communities.append(
            Community(
                page=node,
                score=float(scores[node]),
                members=g.in_neighbors(node),
                algorithm=ranked.algorithm,
                factor=factor,
            )
        )

    communities.sort(key=lambda c: (-c.score, c.page))
    logger.info(
        f"{ranked.algorithm}: {len(candidates)} candidates, {len(communities)} community pages"
    )
    return communities


def detect_communities(g: DirectedGraph, cfg: DetectionConfig) -> List[Community]:
    """
    Rank, take the candidate pool, keep pages without out-links.

    Returns:
        Communities sorted by descending score, ties by ascending page index.
        An empty list is a valid result.
    """
    if g.n == 0:
        return []
    ranked = ranking_scores(g, cfg)
    return select_communities(g, ranked, cfg.top_k, cfg.score_threshold)
