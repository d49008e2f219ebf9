# Synthetic elections from the Mallows model
from synth.mallows import (
    MallowsConfig,
    expected_swaps,
    generate_no_condorcet,
    mallows_sample,
    phi_from_norm_phi,
    sample_no_condorcet,
)

__all__ = [
    "MallowsConfig",
    "expected_swaps",
    "generate_no_condorcet",
    "mallows_sample",
    "phi_from_norm_phi",
    "sample_no_condorcet",
]
