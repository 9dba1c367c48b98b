"""
Shared helpers for the iterative ranking algorithms: normalization, the
convergence distance, top-k selection and the strict-convergence check.
"""

from typing import Optional, Union

import numpy as np

from Configuration import NormKind
from Utils.errors import DidNotConverge, InputError

from .Models import HubAuthScores, ScoreVector


def normalize(vector: np.ndarray, norm: NormKind) -> np.ndarray:
    """
    Rescale a non-negative vector to unit L1 or L2 norm.

    A zero vector is returned unchanged (as zeros), never NaN.
    """
    order = 1 if norm == NormKind.L1 else 2
    total = float(np.linalg.norm(vector, ord=order)) if vector.size else 0.0
    if total == 0.0:
        return np.zeros_like(vector, dtype=np.float64)
    return vector / total


def l1_distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.abs(a - b).sum())


def start_vector(n: int, initial: Optional[np.ndarray], name: str) -> np.ndarray:
    """
    Validate a caller-supplied start vector, or return all ones.

    Raises:
        InputError: If the vector has the wrong length, a negative entry, or no mass
    """
    if initial is None:
        return np.ones(n, dtype=np.float64)
    vec = np.asarray(initial, dtype=np.float64)
    if vec.shape != (n,):
        raise InputError(f"{name} start vector must have length {n}, got shape {vec.shape}")
    if (vec < 0).any() or vec.sum() == 0:
        raise InputError(f"{name} start vector must be non-negative with positive mass")
    return vec.copy()


def top_ranked(scores: np.ndarray, k: int) -> np.ndarray:
    """
    Indices of the k highest scores, highest first, ties by ascending index.
    """
    if k <= 0:
        return np.zeros(0, dtype=np.int64)
    # lexsort sorts by the last key first
    order = np.lexsort((np.arange(len(scores)), -np.asarray(scores, dtype=np.float64)))
    return order[:k]


def ensure_converged(
    result: Union[ScoreVector, HubAuthScores]
) -> Union[ScoreVector, HubAuthScores]:
    """
    Return the result unchanged, or raise DidNotConverge carrying it.
    """
    if not result.converged:
        raise DidNotConverge(result.algorithm, result.iterations, result)
    return result
