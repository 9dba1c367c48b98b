"""
Parameter set of a fitted PHITS aspect model.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class PhitsModel:
    """
    P(d, c) = P(d) * sum_z P(c|z) P(z|d), fitted by EM.

    Arrays are indexed by node; the factor axis is last:
    `p_z_given_d[d, z]` (rows sum to 1) and `p_c_given_z[c, z]` (columns sum to 1).
    """
    p_d: np.ndarray
    p_z_given_d: np.ndarray
    p_c_given_z: np.ndarray
    log_likelihood: float
    iterations: int
    restart_index: int
    converged: bool
    cited: np.ndarray
    """True for nodes with at least one in-link."""
    trace: Tuple[float, ...] = ()
    """Log-likelihood after every EM step of the winning restart, starting at its random init."""

    @property
    def factors(self) -> int:
        return self.p_c_given_z.shape[1]

    @property
    def n(self) -> int:
        return self.p_d.shape[0]

    def p_z(self) -> np.ndarray:
        """Marginal factor distribution P(z) = sum_d P(z|d) P(d)."""
        return self.p_z_given_d.T @ self.p_d
