# Brute-force tiebreaker enumeration: the correctness oracle and slow baseline
from oracle.enumeration import (
    PUT_RULES,
    UniverseEnumeration,
    brute_force_put,
    count_universes,
    enumerate_river_diagrams,
    tie_blocks,
)

__all__ = [
    "PUT_RULES",
    "UniverseEnumeration",
    "brute_force_put",
    "count_universes",
    "enumerate_river_diagrams",
    "tie_blocks",
]
