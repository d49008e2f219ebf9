"""
Exhaustive enumeration of tiebreaker universes
Every equal-margin block is permuted independently; universes are their cartesian product
"""
import math
import time
from dataclasses import dataclass
from itertools import groupby, islice, permutations, product
from typing import Callable, Dict, Iterator, Optional, Set, Tuple, Union

from loguru import logger

from config import settings
from errors import RuleTimeout, UniverseLimitExceeded
from margins.graph import MarginGraph
from river.river import RiverDiagram, ranked_pairs, river
from river.tiebreaker import Tiebreaker

Edge = Tuple[int, int]
Block = Tuple[int, Tuple[Edge, ...]]

PUT_RULES: Dict[str, Callable[[MarginGraph, Tiebreaker], int]] = {
    "river": lambda g, t: river(g, t, validate=False).root,
    "ranked_pairs": lambda g, t: ranked_pairs(g, t, validate=False).winner,
}

DEADLINE_CHECK_EVERY = 64


def tie_blocks(g: MarginGraph) -> Tuple[Block, ...]:
    """Maximal equal-margin groups of positive edges, descending margin"""
    return tuple(
        (weight, tuple((x, y) for x, y, _ in block))
        for weight, block in groupby(g.positive_edges(), key=lambda e: e[2])
    )


@dataclass(frozen=True)
class UniverseEnumeration:
    tie_blocks: Tuple[Block, ...]

    @classmethod
    def of(cls, g: MarginGraph) -> "UniverseEnumeration":
        return cls(tie_blocks(g))

    @property
    def universe_count(self) -> int:
        return math.prod(math.factorial(len(edges)) for _, edges in self.tie_blocks)

    def __len__(self) -> int:
        return self.universe_count

    def __iter__(self) -> Iterator[Tiebreaker]:
        return self.slice(0, 1)

    def slice(self, part: int, parts: int) -> Iterator[Tiebreaker]:
        """
        Universes whose first-block permutation index is congruent to part mod parts

        The slices for part = 0..parts-1 are disjoint and cover every universe.
        """
        if not self.tie_blocks:
            if part == 0:
                yield Tiebreaker(())
            return
        first = islice(permutations(self.tie_blocks[0][1]), part, None, parts)
        rest = [permutations(edges) for _, edges in self.tie_blocks[1:]]
        for combo in product(first, *rest):
            yield Tiebreaker(tuple(edge for block in combo for edge in block))


def count_universes(g: MarginGraph) -> int:
    return UniverseEnumeration.of(g).universe_count


def _resolve_rule(rule: Union[str, Callable]) -> Callable[[MarginGraph, Tiebreaker], int]:
    if callable(rule):
        return rule
    key = rule.replace("-", "_")
    if key not in PUT_RULES:
        raise ValueError(f"unknown PUT rule {rule!r}; expected one of {sorted(PUT_RULES)}")
    return PUT_RULES[key]


def _checked_enumeration(g: MarginGraph, limit: Optional[int]) -> UniverseEnumeration:
    g.require_strict()
    enumeration = UniverseEnumeration.of(g)
    limit = settings.UNIVERSE_LIMIT if limit is None else limit
    count = enumeration.universe_count
    if count > limit:
        raise UniverseLimitExceeded(count, limit)
    return enumeration


def put_winners_for_slice(g: MarginGraph, rule: Union[str, Callable], part: int = 0, parts: int = 1,
                          limit: Optional[int] = None, deadline: Optional[float] = None) -> Set[int]:
    """Union of winners over one slice of the universes"""
    run = _resolve_rule(rule)
    enumeration = _checked_enumeration(g, limit)
    started = time.monotonic()
    winners: Set[int] = set()
    for i, t in enumerate(enumeration.slice(part, parts)):
        if deadline is not None and i % DEADLINE_CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise RuleTimeout(time.monotonic() - started)
        winners.add(run(g, t))
    return winners


def brute_force_put(g: MarginGraph, rule: Union[str, Callable] = "river", limit: Optional[int] = None,
                    deadline: Optional[float] = None) -> Set[int]:
    """
    Union of a rule's winners over every tiebreaker universe

    Args:
        g: Strict margin graph
        rule: 'river', 'ranked_pairs' or a callable (g, tiebreaker) -> winner
        limit: Maximum number of universes, settings.UNIVERSE_LIMIT by default
        deadline: time.monotonic() value after which RuleTimeout is raised

    Returns:
        Set of winning alternatives
    """
    winners = put_winners_for_slice(g, rule, limit=limit, deadline=deadline)
    logger.debug(f"Brute-force PUT over {count_universes(g)} universes: winners {sorted(winners)}")
    return winners


def enumerate_river_diagrams(g: MarginGraph, limit: Optional[int] = None) -> Iterator[Tuple[Tiebreaker, RiverDiagram]]:
    """Yield (tiebreaker, River diagram) for every universe"""
    for t in _checked_enumeration(g, limit):
        yield t, river(g, t, validate=False)
