"""
SALSA: hub and authority weights as stationary distributions of two random walks.

The authority chain steps backwards along a link and then forwards along
another (i <- k -> j); the hub chain does the reverse. Each chain lives on the
nodes that have the matching degree.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from Configuration import RankingConfig, RankingDefaults, SalsaMethod
from Graph import DirectedGraph
from Utils.errors import EmptyGraph

from .Models import HubAuthScores, SalsaMatrices
from .Normalization import l1_distance, normalize

logger = logging.getLogger(__name__)


def _inverse(degrees: np.ndarray) -> np.ndarray:
    inv = np.zeros(len(degrees), dtype=np.float64)
    np.divide(1.0, degrees, out=inv, where=degrees > 0)
    return inv


def build_salsa_matrices(g: DirectedGraph) -> SalsaMatrices:
    """
    Build the hub chain H and authority chain A.

    h_ij = sum over k in F(i) & F(j) of 1/|F(i)| * 1/|B(k)|
    a_ij = sum over k in B(i) & B(j) of 1/|B(i)| * 1/|F(k)|

    Raises:
        EmptyGraph: If the graph has no edges
    """
    if g.m == 0:
        raise EmptyGraph("SALSA needs at least one edge")

    w = g.adjacency()
    w_t = w.T.tocsr()
    inv_out = sparse.diags(_inverse(g.out_degrees()))
    inv_in = sparse.diags(_inverse(g.in_degrees()))

    hub_full = (inv_out @ w @ inv_in @ w_t).tocsr()
    auth_full = (inv_in @ w_t @ inv_out @ w).tocsr()

    hub_support = np.flatnonzero(g.out_degrees() > 0)
    auth_support = np.flatnonzero(g.in_degrees() > 0)

    hub_matrix = hub_full[hub_support][:, hub_support].tocsr()
    authority_matrix = auth_full[auth_support][:, auth_support].tocsr()
    logger.debug(
        f"SALSA chains built: {len(hub_support)} hub states, {len(auth_support)} authority states"
    )
    return SalsaMatrices(
        hub_matrix=hub_matrix,
        authority_matrix=authority_matrix,
        hub_support=hub_support,
        auth_support=auth_support,
    )


def _stationary(
    chain: sparse.csr_matrix, cfg: RankingConfig
) -> Tuple[np.ndarray, int, bool]:
    """Power iteration x <- x P from the uniform start."""
    size = chain.shape[0]
    x = np.full(size, 1.0 / size)
    chain_t = chain.T.tocsr()
    for iteration in range(1, cfg.max_iters + 1):
        new_x = normalize(chain_t @ x, RankingDefaults.PROBABILITY_NORM)
        delta = l1_distance(new_x, x)
        x = new_x
        if delta < cfg.tol:
            return x, iteration, True
    return x, cfg.max_iters, False


def salsa(g: DirectedGraph, cfg: Optional[RankingConfig] = None) -> HubAuthScores:
    """
    SALSA hub and authority weights.

    closed_form: authority(i) = |B(i)| / m, hub(i) = |F(i)| / m over the whole
    graph, i.e. every co-citation component weighted by its share of edges.
    power_iteration: stationary distributions of A and H from the uniform start;
    agrees with the closed form whenever each chain's support is connected.

    Raises:
        EmptyGraph: If the graph has no edges
    """
    cfg = cfg or RankingConfig()
    if g.m == 0:
        raise EmptyGraph("SALSA needs at least one edge")

    norm = cfg.norm_or(RankingDefaults.PROBABILITY_NORM)

    if cfg.salsa_method == SalsaMethod.CLOSED_FORM:
        auths = g.in_degrees() / g.m
        hubs = g.out_degrees() / g.m
        logger.info("SALSA (closed_form) computed")
        return HubAuthScores(
            hubs=normalize(hubs.astype(np.float64), norm),
            authorities=normalize(auths.astype(np.float64), norm),
            iterations=1,
            converged=True,
            algorithm="salsa",
        )

    matrices = build_salsa_matrices(g)
    hub_pi, hub_iters, hub_ok = _stationary(matrices.hub_matrix, cfg)
    auth_pi, auth_iters, auth_ok = _stationary(matrices.authority_matrix, cfg)

    hubs = np.zeros(g.n, dtype=np.float64)
    auths = np.zeros(g.n, dtype=np.float64)
    hubs[matrices.hub_support] = hub_pi
    auths[matrices.auth_support] = auth_pi

    converged = hub_ok and auth_ok
    iterations = max(hub_iters, auth_iters)
    if converged:
        logger.info(f"SALSA (power_iteration) converged after {iterations} iterations")
    else:
        logger.warning(f"SALSA (power_iteration) did not converge after {iterations} iterations")

    return HubAuthScores(
        hubs=normalize(hubs, norm),
        authorities=normalize(auths, norm),
        iterations=iterations,
        converged=converged,
        algorithm="salsa",
    )
