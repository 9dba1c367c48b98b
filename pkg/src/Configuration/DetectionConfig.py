"""
Community detection configuration.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .PhitsConfig import PhitsConfig
from .RankingConfig import RankingConfig


class Algorithm(str, Enum):
    """Ranking algorithms the detector can score with."""
    INDEGREE = "indegree"
    PAGERANK = "pagerank"
    HITS = "hits"
    SALSA = "salsa"
    PHITS = "phits"
    HUBAVG = "hubavg"


class DetectionDefaults:
    """Defaults for the community detection pipeline."""

    TOP_K_DIVISOR: int = 100
    """CLI default candidate pool is max(1, n // TOP_K_DIVISOR)."""

    @staticmethod
    def default_top_k(n: int) -> int:
        """Candidate pool size used when neither --top-k nor --threshold is given."""
        return max(1, n // DetectionDefaults.TOP_K_DIVISOR)


class DetectionConfig(BaseModel):
    """Settings for one detect_communities run."""

    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm
    top_k: Optional[int] = Field(None, ge=1)
    score_threshold: Optional[float] = None
    ranking: RankingConfig = Field(default_factory=RankingConfig)
    phits: Optional[PhitsConfig] = None

    @model_validator(mode="after")
    def _check_selection(self) -> "DetectionConfig":
        if (self.top_k is None) == (self.score_threshold is None):
            raise ValueError("exactly one of top_k and score_threshold must be set")
        if self.algorithm == Algorithm.PHITS and self.phits is None:
            raise ValueError("algorithm 'phits' needs a phits configuration (factor count)")
        return self
