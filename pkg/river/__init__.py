# Fixed-tiebreaker runners: River and Ranked Pairs
from river.tiebreaker import (
    Tiebreaker,
    default_tiebreaker,
    format_tiebreaker,
    parse_tiebreaker,
    validate_tiebreaker,
)
from river.river import RankedPairsResult, RiverDiagram, ranked_pairs, river

__all__ = [
    "Tiebreaker",
    "default_tiebreaker",
    "format_tiebreaker",
    "parse_tiebreaker",
    "validate_tiebreaker",
    "RankedPairsResult",
    "RiverDiagram",
    "ranked_pairs",
    "river",
]
