"""
PageRank power iteration over a sparse transition matrix.

Two variants are offered:

* paper_faithful: R_i <- sum over j in B(i) of R_j / L_j, with no damping. A
  node without out-links keeps the rank it holds, so hubs pointing at an
  isolated node hand it all of their weight. Every sweep is L1-renormalized.
* damped: R <- d * M R + ((1 - d) / n + d * dangling / n), the usual
  formulation with dangling mass spread uniformly.
"""

import logging
from typing import Callable, Optional

import numpy as np

from Configuration import PageRankMode, RankingConfig, RankingDefaults
from Graph import DirectedGraph
from Utils.errors import EmptyGraph

from .Models import ScoreVector
from .Normalization import l1_distance, normalize, start_vector

logger = logging.getLogger(__name__)

SweepCallback = Callable[[int, np.ndarray], None]


def pagerank(
    g: DirectedGraph,
    cfg: Optional[RankingConfig] = None,
    initial: Optional[np.ndarray] = None,
    callback: Optional[SweepCallback] = None,
) -> ScoreVector:
    """
    Rank nodes by PageRank.

    Args:
        g: The graph; must have at least one node
        cfg: Ranking configuration (mode, damping, tol, max_iters, norm)
        initial: Optional non-negative start vector; all ones by default
        callback: Called as callback(sweep, iterate) after every sweep

    Returns:
        A ScoreVector. Non-convergence is reported via `converged`, not raised.

    Raises:
        EmptyGraph: If the graph has no nodes
    """
    cfg = cfg or RankingConfig()
    n = g.n
    if n == 0:
        raise EmptyGraph("PageRank needs at least one node")

    out_deg = g.out_degrees()
    dangling = out_deg == 0
    inv_out = np.zeros(n, dtype=np.float64)
    np.divide(1.0, out_deg, out=inv_out, where=~dangling)
    # column-stochastic over non-dangling sources: new[i] = sum_j W[j, i] R[j] / L_j
    w_t = g.adjacency().T.tocsr()

    rank = normalize(start_vector(n, initial, "PageRank"), RankingDefaults.PROBABILITY_NORM)
    mode = cfg.pagerank_mode
    d = cfg.damping

    converged = False
    iterations = 0
    for iterations in range(1, cfg.max_iters + 1):
        flow = w_t @ (rank * inv_out)
        if mode == PageRankMode.PAPER_FAITHFUL:
            # dangling nodes keep their rank, so the sweep conserves mass
            new_rank = flow + np.where(dangling, rank, 0.0)
        else:
            leaked = float(rank[dangling].sum())
            new_rank = d * flow + ((1.0 - d) + d * leaked) / n
        new_rank = normalize(new_rank, RankingDefaults.PROBABILITY_NORM)

        if callback is not None:
            callback(iterations, new_rank)

        delta = l1_distance(new_rank, rank)
        rank = new_rank
        if delta < cfg.tol:
            converged = True
            break

    if converged:
        logger.info(f"PageRank ({mode.value}) converged after {iterations} iterations")
    else:
        logger.warning(f"PageRank ({mode.value}) did not converge after {iterations} iterations")

    scores = normalize(rank, cfg.norm_or(RankingDefaults.PROBABILITY_NORM))
    return ScoreVector(
        scores=scores, iterations=iterations, converged=converged, algorithm="pagerank"
    )
