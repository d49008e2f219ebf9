"""
Winner rules by name, as used by the CLI and the benchmark harness
"""
from typing import Callable, Dict, Optional, Set

from errors import ConfigError
from fun.diagram import rv_put_winners
from margins.graph import MarginGraph
from oracle.enumeration import brute_force_put
from river.river import ranked_pairs, river
from river.tiebreaker import Tiebreaker, default_tiebreaker
from comparison.rules import beat_path_winners, split_cycle_winners

TIEBREAKER_RULES = ("river", "ranked-pairs")
BRUTE_FORCE_RULES = ("rv-put-brute", "rp-put-brute")

ALIASES = {"fun": "fun-put", "split_cycle": "split-cycle", "beat_path": "beat-path", "ranked_pairs": "ranked-pairs"}


def _river(g: MarginGraph, tiebreaker: Optional[Tiebreaker], **_) -> Set[int]:
    return {river(g, tiebreaker or default_tiebreaker(g)).root}


def _ranked_pairs(g: MarginGraph, tiebreaker: Optional[Tiebreaker], **_) -> Set[int]:
    return {ranked_pairs(g, tiebreaker or default_tiebreaker(g)).winner}


RULES: Dict[str, Callable[..., Set[int]]] = {
    "fun-put": lambda g, **_: rv_put_winners(g),
    "river": _river,
    "ranked-pairs": _ranked_pairs,
    "split-cycle": lambda g, **_: split_cycle_winners(g),
    "beat-path": lambda g, **_: beat_path_winners(g),
    "rv-put-brute": lambda g, limit=None, deadline=None, **_: brute_force_put(g, "river", limit, deadline),
    "rp-put-brute": lambda g, limit=None, deadline=None, **_: brute_force_put(g, "ranked_pairs", limit, deadline),
}

RULE_NAMES = tuple(RULES)


def canonical_rule(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in RULES:
        raise ConfigError(f"unknown rule {name!r}; expected one of {', '.join(RULE_NAMES)}")
    return name


def compute_winners(g: MarginGraph, rule: str, tiebreaker: Optional[Tiebreaker] = None,
                    limit: Optional[int] = None, deadline: Optional[float] = None) -> Set[int]:
    """
    Winner set of a named rule

    Args:
        g: Margin graph
        rule: One of RULE_NAMES (or an alias such as 'fun')
        tiebreaker: Fixed tiebreaker for river / ranked-pairs; default order when omitted
        limit: Universe limit for the brute-force rules
        deadline: time.monotonic() deadline for the brute-force rules
    """
    return RULES[canonical_rule(rule)](g, tiebreaker=tiebreaker, limit=limit, deadline=deadline)
