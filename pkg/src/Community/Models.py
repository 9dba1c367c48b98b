"""
Data types produced by community detection.
"""

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class Community:
    """A community page (no out-links) and the nodes linking to it."""
    page: int
    score: float
    members: Tuple[int, ...]
    """B(page), ascending."""
    algorithm: str
    factor: Optional[int] = None
    """PHITS factor whose P(c|z) gave the page its score."""

    @property
    def member_set(self) -> FrozenSet[int]:
        return frozenset(self.members)


@dataclass(frozen=True, eq=False)
class NodeScores:
    """The vector a detection run ranks on, plus what came with it."""
    algorithm: str
    scores: np.ndarray
    iterations: int
    converged: bool
    hubs: Optional[np.ndarray] = None
    raw: Optional[np.ndarray] = None
    factors: Optional[np.ndarray] = None


@dataclass(frozen=True)
class OverlapPair:
    """Two communities sharing at least one member."""
    page_a: int
    page_b: int
    shared: Tuple[int, ...]
    jaccard: float


@dataclass(frozen=True)
class OverlapReport:
    pairs: Tuple[OverlapPair, ...]
    multi_members: Tuple[int, ...]
    """Nodes belonging to two or more communities, ascending."""

    @property
    def is_empty(self) -> bool:
        return not self.pairs
