"""
Ranking constants and run configuration.

This module contains the defaults shared by the iterative ranking algorithms and
the pydantic model that carries one run's settings.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class NormKind(str, Enum):
    """Vector norms used to rescale iterates."""
    L1 = "l1"
    L2 = "l2"


class PageRankMode(str, Enum):
    """PageRank variants."""
    PAPER_FAITHFUL = "paper_faithful"
    DAMPED = "damped"


class SalsaMethod(str, Enum):
    """How SALSA's stationary distributions are obtained."""
    CLOSED_FORM = "closed_form"
    POWER_ITERATION = "power_iteration"


class RankingDefaults:
    """Defaults for the iterative ranking algorithms."""

    MAX_ITERS: int = 1000
    """Sweep cap for every fixed-point iteration."""
    TOL: float = 1e-8
    """Stop once the L1 distance between successive normalized iterates drops below this."""
    DAMPING: float = 0.85
    """Damping factor for damped PageRank."""
    HUB_AUTHORITY_NORM: NormKind = NormKind.L2
    """Default norm for HITS and HubAvg hub/authority vectors."""
    PROBABILITY_NORM: NormKind = NormKind.L1
    """Default norm for InDegree, PageRank and SALSA."""
    PAGERANK_MODE: PageRankMode = PageRankMode.DAMPED
    """Default PageRank variant."""
    SALSA_METHOD: SalsaMethod = SalsaMethod.CLOSED_FORM
    """Default SALSA method."""


class RankingConfig(BaseModel):
    """Settings for one ranking run."""

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    max_iters: int = Field(RankingDefaults.MAX_ITERS, ge=1)
    tol: float = Field(RankingDefaults.TOL, gt=0)
    norm: Optional[NormKind] = Field(
        None, description="Overrides the per-algorithm default norm when set."
    )
    pagerank_mode: PageRankMode = RankingDefaults.PAGERANK_MODE
    damping: float = Field(RankingDefaults.DAMPING, gt=0, lt=1)
    salsa_method: SalsaMethod = RankingDefaults.SALSA_METHOD

    def norm_or(self, default: NormKind) -> NormKind:
        """Return the configured norm, or the algorithm's default when unset."""
        return self.norm if self.norm is not None else default
