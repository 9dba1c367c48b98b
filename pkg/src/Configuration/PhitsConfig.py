"""
Constants and run configuration for the PHITS aspect model.
"""

from pydantic import BaseModel, ConfigDict, Field


class PhitsDefaults:
    """Defaults for PHITS estimation."""

    MAX_EM_ITERS: int = 500
    """Cap on EM iterations per restart."""
    LL_TOL: float = 1e-7
    """Stop a restart once the relative log-likelihood gain drops below this."""
    RESTARTS: int = 8
    """Random restarts; the best final log-likelihood wins."""
    SEED: int = 0
    """Seed for the restart generator."""
    EPSILON: float = 1e-12
    """Added to E-step denominators so a factor that loses all mass yields 0, not NaN."""
    MONOTONICITY_SLACK: float = 1e-10
    """Round-off allowance when checking that the log-likelihood never decreases."""


class PhitsConfig(BaseModel):
    """Settings for one PHITS fit. The factor count has no default."""

    model_config = ConfigDict(frozen=True)

    factors: int = Field(..., ge=1, description="Number of latent factors z.")
    max_em_iters: int = Field(PhitsDefaults.MAX_EM_ITERS, ge=1)
    ll_tol: float = Field(PhitsDefaults.LL_TOL, gt=0)
    restarts: int = Field(PhitsDefaults.RESTARTS, ge=1)
    seed: int = Field(PhitsDefaults.SEED, ge=0, lt=2**64)
