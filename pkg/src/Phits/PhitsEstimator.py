"""
EM estimation of the PHITS aspect model.

Observations are the graph's edges (d -> c) with binary counts. Each restart
draws its random start from generators seeded by (seed, restart, node label),
so restarts are independent of the order they run in and of node numbering.
The restart with the highest final log-likelihood wins; ties go to the lowest
restart index.
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from Configuration import PhitsConfig, PhitsDefaults
from Graph import DirectedGraph
from Utils.errors import EmptyGraph, FactorsExceedNodes

from .Models import PhitsModel

logger = logging.getLogger(__name__)

EmCallback = Callable[[int, int, float], None]


class _Observations:
    """Edge arrays and the fixed document marginal."""

    def __init__(self, g: DirectedGraph) -> None:
        edges = list(g.edges())
        self.n = g.n
        self.labels = g.labels
        self.src = np.fromiter((i for i, _ in edges), dtype=np.int64, count=len(edges))
        self.dst = np.fromiter((j for _, j in edges), dtype=np.int64, count=len(edges))
        out_deg = g.out_degrees()
        # M-step for P(d) is n(d)/m and does not depend on the factors
        self.p_d = out_deg / g.m
        self.citing = out_deg > 0
        self.cited = g.in_degrees() > 0


def _log_likelihood(obs: _Observations, p_zd: np.ndarray, p_cz: np.ndarray) -> float:
    mix = (p_cz[obs.dst] * p_zd[obs.src]).sum(axis=1)
    return float(np.log(obs.p_d[obs.src] * mix).sum())


def _em_step(
    obs: _Observations, p_zd: np.ndarray, p_cz: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    factors = p_zd.shape[1]

    # E-step: P(z|d,c) for every observed pair
    joint = p_cz[obs.dst] * p_zd[obs.src]
    posterior = joint / (joint.sum(axis=1, keepdims=True) + PhitsDefaults.EPSILON)

    # M-step
    cite_mass = np.column_stack(
        [np.bincount(obs.dst, weights=posterior[:, z], minlength=obs.n) for z in range(factors)]
    )
    doc_mass = np.column_stack(
        [np.bincount(obs.src, weights=posterior[:, z], minlength=obs.n) for z in range(factors)]
    )

    col_totals = cite_mass.sum(axis=0)
    new_p_cz = np.full_like(p_cz, 1.0 / obs.n)
    live = col_totals > 0
    new_p_cz[:, live] = cite_mass[:, live] / col_totals[live]

    row_totals = doc_mass.sum(axis=1)
    new_p_zd = np.full_like(p_zd, 1.0 / factors)
    rows = obs.citing & (row_totals > 0)
    new_p_zd[rows] = doc_mass[rows] / row_totals[rows, None]
    return new_p_zd, new_p_cz


def _label_entropy(seed: int, restart: int, label: str) -> List[int]:
    encoded = label.encode("utf-8")
    return [seed, restart, len(encoded), *encoded]


def _random_start(
    obs: _Observations, factors: int, seed: int, restart: int
) -> Tuple[np.ndarray, np.ndarray]:
    # rows are keyed by label: relabeling the graph permutes the start
    p_zd = np.empty((obs.n, factors))
    p_cz = np.empty((obs.n, factors))
    for i, label in enumerate(obs.labels):
        rng = np.random.default_rng(_label_entropy(seed, restart, label))
        p_zd[i] = rng.random(factors)
        p_cz[i] = rng.random(factors)
    p_zd /= p_zd.sum(axis=1, keepdims=True)
    # documents that cite nothing carry no evidence; keep them uniform
    p_zd[~obs.citing] = 1.0 / factors
    p_cz /= p_cz.sum(axis=0, keepdims=True)
    return p_zd, p_cz


def _run_restart(
    obs: _Observations,
    cfg: PhitsConfig,
    restart: int,
    callback: Optional[EmCallback],
) -> PhitsModel:
    p_zd, p_cz = _random_start(obs, cfg.factors, cfg.seed, restart)
    ll = _log_likelihood(obs, p_zd, p_cz)
    trace: List[float] = [ll]
    if callback is not None:
        callback(restart, 0, ll)

    converged = False
    iterations = 0
    for iterations in range(1, cfg.max_em_iters + 1):
        p_zd, p_cz = _em_step(obs, p_zd, p_cz)
        new_ll = _log_likelihood(obs, p_zd, p_cz)
        trace.append(new_ll)
        if callback is not None:
            callback(restart, iterations, new_ll)

        gain = new_ll - ll
        if gain < -PhitsDefaults.MONOTONICITY_SLACK:
            logger.warning(
                f"PHITS restart {restart}: log-likelihood fell by {-gain:.3e} at iteration {iterations}"
            )
        threshold = cfg.ll_tol * abs(ll)
        ll = new_ll
        if gain <= threshold:
            converged = True
            break

    logger.debug(
        f"PHITS restart {restart}: log L = {ll:.6f} after {iterations} iterations (converged={converged})"
    )
    return PhitsModel(
        p_d=obs.p_d.copy(),
        p_z_given_d=p_zd,
        p_c_given_z=p_cz,
        log_likelihood=ll,
        iterations=iterations,
        restart_index=restart,
        converged=converged,
        cited=obs.cited.copy(),
        trace=tuple(trace),
    )


def phits_fit(
    g: DirectedGraph,
    cfg: PhitsConfig,
    callback: Optional[EmCallback] = None,
) -> PhitsModel:
    """
    Fit P(d), P(z|d) and P(c|z) by EM with seeded random restarts.

    Args:
        g: The graph; must have at least one edge
        cfg: PHITS configuration (factors, restarts, seed, EM limits)
        callback: Called as callback(restart, iteration, log_likelihood), iteration 0
                  being the random start

    Returns:
        The model of the restart with the highest final log-likelihood

    Raises:
        EmptyGraph: If the graph has no edges
        FactorsExceedNodes: If more factors than nodes are requested
    """
    if g.m == 0:
        raise EmptyGraph("PHITS needs at least one citation")
    if cfg.factors > g.n:
        raise FactorsExceedNodes(f"{cfg.factors} factors requested for a graph with {g.n} nodes")

    obs = _Observations(g)
    logger.info(
        f"Fitting PHITS with {cfg.factors} factors, {cfg.restarts} restarts, seed {cfg.seed}"
    )

    best: Optional[PhitsModel] = None
    for restart in range(cfg.restarts):
        model = _run_restart(obs, cfg, restart, callback)
        if best is None or model.log_likelihood > best.log_likelihood:
            best = model

    assert best is not None
    if best.converged:
        logger.info(
            f"PHITS restart {best.restart_index} won with log L = {best.log_likelihood:.6f} "
            f"after {best.iterations} iterations"
        )
    else:
        logger.warning(
            f"PHITS winning restart {best.restart_index} hit the cap of {cfg.max_em_iters} EM iterations"
        )
    return best


def log_likelihood(model: PhitsModel, g: DirectedGraph) -> float:
    """Recompute log L(A) = sum over edges (d, c) of log P(d, c) for a fitted model."""
    return _log_likelihood(_Observations(g), model.p_z_given_d, model.p_c_given_z)
