"""
HITS hubs and authorities, and the HubAvg variant.

Both alternate an authority step a_i <- sum over j in B(i) of h_j with a hub
step over F(i); HITS sums the authorities a hub points to, HubAvg averages them.
"""

import logging
from typing import Callable, Optional

import numpy as np

from Configuration import RankingConfig, RankingDefaults
from Graph import DirectedGraph
from Utils.errors import EmptyGraph

from .Models import HubAuthScores
from .Normalization import l1_distance, normalize, start_vector

logger = logging.getLogger(__name__)

HubAuthCallback = Callable[[int, np.ndarray, np.ndarray], None]


def _mutual_reinforcement(
    g: DirectedGraph,
    cfg: RankingConfig,
    algorithm: str,
    average_hubs: bool,
    initial: Optional[np.ndarray],
    callback: Optional[HubAuthCallback],
) -> HubAuthScores:
    if g.m == 0:
        raise EmptyGraph(f"{algorithm} needs at least one edge; hub and authority weights are undefined")

    norm = cfg.norm_or(RankingDefaults.HUB_AUTHORITY_NORM)
    w = g.adjacency()
    w_t = w.T.tocsr()

    hub_scale = None
    if average_hubs:
        out_deg = g.out_degrees()
        hub_scale = np.zeros(g.n, dtype=np.float64)
        np.divide(1.0, out_deg, out=hub_scale, where=out_deg > 0)

    hubs = normalize(start_vector(g.n, initial, algorithm), norm)
    auths = np.zeros(g.n, dtype=np.float64)

    converged = False
    iterations = 0
    for iterations in range(1, cfg.max_iters + 1):
        new_auths = normalize(w_t @ hubs, norm)
        new_hubs = w @ new_auths
        if hub_scale is not None:
            new_hubs = new_hubs * hub_scale
        new_hubs = normalize(new_hubs, norm)

        if callback is not None:
            callback(iterations, new_hubs, new_auths)

        delta = max(l1_distance(new_auths, auths), l1_distance(new_hubs, hubs))
        hubs, auths = new_hubs, new_auths
        if delta < cfg.tol:
            converged = True
            break

    if converged:
        logger.info(f"{algorithm} converged after {iterations} iterations")
    else:
        logger.warning(f"{algorithm} did not converge after {iterations} iterations")

    return HubAuthScores(
        hubs=hubs, authorities=auths, iterations=iterations, converged=converged, algorithm=algorithm
    )


def hits(
    g: DirectedGraph,
    cfg: Optional[RankingConfig] = None,
    initial: Optional[np.ndarray] = None,
    callback: Optional[HubAuthCallback] = None,
) -> HubAuthScores:
    """
    Kleinberg's HITS over the whole graph.

    Args:
        g: The graph; must have at least one edge
        cfg: Ranking configuration (default L2 normalization)
        initial: Optional non-negative start hub vector; all ones by default
        callback: Called as callback(sweep, hubs, authorities) after every sweep

    Returns:
        HubAuthScores; nodes with no in-links have authority 0, nodes with no
        out-links have hub score 0.

    Raises:
        EmptyGraph: If the graph has no edges
    """
    return _mutual_reinforcement(g, cfg or RankingConfig(), "hits", False, initial, callback)


def hubavg(
    g: DirectedGraph,
    cfg: Optional[RankingConfig] = None,
    initial: Optional[np.ndarray] = None,
    callback: Optional[HubAuthCallback] = None,
) -> HubAuthScores:
    """
    Hub-Averaging: HITS authorities, hubs scored by the mean authority they point to.

    Same arguments, result and errors as `hits`.
    """
    return _mutual_reinforcement(g, cfg or RankingConfig(), "hubavg", True, initial, callback)
