"""
Result types for the ranking algorithms.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import sparse


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """Per-node scores from a single-vector algorithm (InDegree, PageRank)."""
    scores: np.ndarray
    iterations: int
    converged: bool
    algorithm: str
    raw: Optional[np.ndarray] = None
    """Unnormalized values, when they mean something on their own (InDegree counts)."""

    def __len__(self) -> int:
        return len(self.scores)


@dataclass(frozen=True, eq=False)
class HubAuthScores:
    """Per-node hub and authority scores (HITS, SALSA, HubAvg)."""
    hubs: np.ndarray
    authorities: np.ndarray
    iterations: int
    converged: bool
    algorithm: str

    def __len__(self) -> int:
        return len(self.authorities)


@dataclass(frozen=True, eq=False)
class SalsaMatrices:
    """
    SALSA's two row-stochastic chains, each restricted to its support.

    Row/column k of `hub_matrix` is node `hub_support[k]`; likewise for the
    authority chain.
    """
    hub_matrix: sparse.csr_matrix
    authority_matrix: sparse.csr_matrix
    hub_support: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    auth_support: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
