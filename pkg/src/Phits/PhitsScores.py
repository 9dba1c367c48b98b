"""
Scores read off a fitted PHITS model.
"""

from typing import List, Tuple

import numpy as np

from Ranking.Models import ScoreVector
from Utils.errors import IndexOutOfRange, NeverCited

from .Models import PhitsModel


def _per_factor(model: PhitsModel, matrix: np.ndarray) -> List[ScoreVector]:
    return [
        ScoreVector(
            scores=matrix[:, z].copy(),
            iterations=model.iterations,
            converged=model.converged,
            algorithm="phits",
        )
        for z in range(model.factors)
    ]


def phits_authority_scores(model: PhitsModel) -> List[ScoreVector]:
    """Authority of document c in factor z is P(c|z); one L1-normalized vector per factor."""
    return _per_factor(model, model.p_c_given_z)


def phits_authority_aggregate(model: PhitsModel) -> Tuple[ScoreVector, np.ndarray]:
    """
    Max over factors of P(c|z), with the factor attaining it (lowest index on ties).
    """
    winners = np.argmax(model.p_c_given_z, axis=1)
    scores = model.p_c_given_z[np.arange(model.n), winners]
    vector = ScoreVector(
        scores=scores, iterations=model.iterations, converged=model.converged, algorithm="phits"
    )
    return vector, winners


def _membership_matrix(model: PhitsModel) -> np.ndarray:
    """P(z|c) for every cited document; zero rows for the rest."""
    weighted = model.p_c_given_z * model.p_z()
    totals = weighted.sum(axis=1)
    out = np.zeros_like(weighted)
    rows = model.cited & (totals > 0)
    out[rows] = weighted[rows] / totals[rows, None]
    return out


def phits_membership(model: PhitsModel, c: int) -> np.ndarray:
    """
    P(z|c), proportional to P(c|z) P(z).

    Raises:
        IndexOutOfRange: If c is not a node of the model
        NeverCited: If nobody links to c
    """
    if not 0 <= c < model.n:
        raise IndexOutOfRange(c, model.n)
    if not model.cited[c]:
        raise NeverCited(c)
    weighted = model.p_c_given_z[c] * model.p_z()
    total = weighted.sum()
    if total == 0:
        return np.full(model.factors, 1.0 / model.factors)
    return weighted / total


def phits_characteristic(model: PhitsModel) -> List[ScoreVector]:
    """How characteristic document c is of factor z: P(z|c) * P(c|z). Never-cited documents score 0."""
    return _per_factor(model, _membership_matrix(model) * model.p_c_given_z)


def phits_hub_scores(model: PhitsModel) -> List[ScoreVector]:
    """Hub view of each factor: P(d|z), proportional to P(z|d) P(d)."""
    weighted = model.p_z_given_d * model.p_d[:, None]
    totals = weighted.sum(axis=0)
    hubs = np.zeros_like(weighted)
    live = totals > 0
    hubs[:, live] = weighted[:, live] / totals[live]
    return _per_factor(model, hubs)
