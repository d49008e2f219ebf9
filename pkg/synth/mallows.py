"""
Mallows-model election generator
Repeated-insertion sampling, norm-phi conversion and rejection sampling of Condorcet-free profiles
"""
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field, model_validator

from config import settings
from errors import AttemptsExhausted
from margins.graph import default_names
from profiles.profile import PreferenceProfile, margins


class MallowsConfig(BaseModel):
    """Parameters of one Mallows draw; give phi or norm_phi, not both"""

    m: int = Field(..., ge=1, description="Number of alternatives")
    n: int = Field(..., ge=1, description="Number of voters")
    phi: Optional[float] = Field(None, gt=0, le=1, description="Dispersion")
    norm_phi: Optional[float] = Field(None, gt=0, le=1, description="Normalized dispersion")
    seed: int = Field(0, ge=0, lt=2**64)
    reference: Optional[List[int]] = None

    @model_validator(mode="after")
    def _resolve(self) -> "MallowsConfig":
        if self.phi is not None and self.norm_phi is not None:
            raise ValueError("give either phi or norm_phi, not both")
        if self.phi is None:
            self.phi = phi_from_norm_phi(self.m, self.norm_phi) if self.norm_phi is not None else settings.DEFAULT_PHI
        if self.reference is not None and sorted(self.reference) != list(range(self.m)):
            raise ValueError("reference must be a permutation of 0..m-1")
        return self


def expected_swaps(m: int, phi: float) -> float:
    """Expected Kendall-tau distance of a Mallows(phi) ranking from its reference"""
    if phi >= 1.0:
        return m * (m - 1) / 4
    j = np.arange(1, m + 1, dtype=float)
    return float(m * phi / (1 - phi) - np.sum(j * phi ** j / (1 - phi ** j)))


def phi_from_norm_phi(m: int, norm_phi: float, tolerance: float = 1e-10) -> float:
    """
    Dispersion whose expected swap distance is norm_phi times that of the uniform distribution

    Args:
        m: Number of alternatives
        norm_phi: Target relative expected swaps in (0, 1]

    Returns:
        phi in (0, 1]
    """
    if m < 2 or norm_phi >= 1.0:
        return 1.0
    target = norm_phi * m * (m - 1) / 4
    low, high = 0.0, 1.0
    while high - low > tolerance:
        mid = (low + high) / 2
        if expected_swaps(m, mid) < target:
            low = mid
        else:
            high = mid
    return (low + high) / 2


def mallows_sample(cfg: MallowsConfig) -> PreferenceProfile:
    """
    Draw n rankings by repeated insertion

    The i-th reference alternative is inserted at position j (0..i) with
    probability proportional to phi^(i - j); one ballot per voter.
    """
    rng = np.random.default_rng(cfg.seed)
    reference = cfg.reference if cfg.reference is not None else list(range(cfg.m))
    rankings: List[List[int]] = [[] for _ in range(cfg.n)]
    for i, alt in enumerate(reference):
        weights = cfg.phi ** (i - np.arange(i + 1, dtype=float))
        positions = rng.choice(i + 1, size=cfg.n, p=weights / weights.sum())
        for ranking, position in zip(rankings, positions):
            ranking.insert(int(position), alt)
    return PreferenceProfile.from_rankings(default_names(cfg.m) if cfg.m <= 26 else _padded_names(cfg.m), rankings)


def _padded_names(m: int) -> List[str]:
    width = len(str(m))
    return [f"a{i + 1:0{width}d}" for i in range(m)]


def sample_no_condorcet(cfg: MallowsConfig, max_attempts: Optional[int] = None) -> Tuple[int, PreferenceProfile]:
    """
    Rejection-sample until the profile has no Condorcet winner

    Attempt i uses seed cfg.seed + i.

    Returns:
        (seed used, profile)

    Raises:
        AttemptsExhausted
    """
    max_attempts = settings.BENCH_MAX_ATTEMPTS if max_attempts is None else max_attempts
    for attempt in range(max_attempts):
        seed = cfg.seed + attempt
        profile = mallows_sample(cfg.model_copy(update={"seed": seed}))
        if margins(profile).condorcet_winner() is None:
            logger.debug(f"Condorcet-free profile m={cfg.m} n={cfg.n} after {attempt + 1} attempts (seed {seed})")
            return seed, profile
    raise AttemptsExhausted(max_attempts)


def generate_no_condorcet(cfg: MallowsConfig, max_attempts: Optional[int] = None) -> PreferenceProfile:
    return sample_no_condorcet(cfg, max_attempts)[1]
