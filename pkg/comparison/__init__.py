# Comparison rules and the shared winner-rule registry
from comparison.rules import beat_path_winners, immune_alternatives, split_cycle_winners
from comparison.registry import RULE_NAMES, TIEBREAKER_RULES, compute_winners

__all__ = [
    "beat_path_winners",
    "immune_alternatives",
    "split_cycle_winners",
    "RULE_NAMES",
    "TIEBREAKER_RULES",
    "compute_winners",
]
