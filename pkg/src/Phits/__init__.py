"""
PHITS: a probabilistic aspect model of citations fitted by EM.
"""

from .Models import PhitsModel
from .PhitsEstimator import log_likelihood, phits_fit
from .PhitsScores import (
    phits_authority_aggregate,
    phits_authority_scores,
    phits_characteristic,
    phits_hub_scores,
    phits_membership,
)

__all__ = [
    "PhitsModel",
    "phits_fit",
    "log_likelihood",
    "phits_authority_scores",
    "phits_authority_aggregate",
    "phits_membership",
    "phits_characteristic",
    "phits_hub_scores",
]
