"""
River and Ranked Pairs under a fixed tiebreaker
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from loguru import logger

from errors import InternalInvariantViolation
from margins.graph import MarginGraph
from river.tiebreaker import Tiebreaker, validate_tiebreaker

Edge = Tuple[int, int]


@dataclass(frozen=True)
class RiverDiagram:
    """Branching produced by River; parent[v] = (parent, margin) or None for the root"""
    parent: Tuple[Optional[Tuple[int, int]], ...]
    root: int

    def edges(self) -> List[Tuple[int, int, int]]:
        return sorted((p[0], child, p[1]) for child, p in enumerate(self.parent) if p is not None)

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset((p[0], child) for child, p in enumerate(self.parent) if p is not None)

    def to_dict(self, names: List[str]) -> Dict:
        return {
            "root": names[self.root],
            "edges": [[names[u], names[v], w] for u, v, w in self.edges()],
        }


class RankedPairsResult(NamedTuple):
    locked: FrozenSet[Edge]
    winner: int


def _creates_cycle(parent: List[Optional[Tuple[int, int]]], x: int, y: int) -> bool:
    # Accepted edges form in-trees, so (x, y) closes a cycle iff y is an ancestor of x
    v: Optional[int] = x
    while v is not None:
        if v == y:
            return True
        link = parent[v]
        v = link[0] if link is not None else None
    return False


def river(g: MarginGraph, t: Tiebreaker, validate: bool = True) -> RiverDiagram:
    """
    Run the River method

    Args:
        g: Strict margin graph
        t: Tiebreaker for g
        validate: Re-check t against g first

    Returns:
        RiverDiagram whose root is the winner
    """
    g.require_strict()
    if validate:
        validate_tiebreaker(g, t)

    parent: List[Optional[Tuple[int, int]]] = [None] * g.m
    for x, y in t.order:
        if parent[y] is not None:
            continue
        if _creates_cycle(parent, x, y):
            continue
        parent[y] = (x, g.weight(x, y))

    roots = [v for v in range(g.m) if parent[v] is None]
    if len(roots) != 1:
        raise InternalInvariantViolation(f"River diagram has {len(roots)} roots")
    return RiverDiagram(parent=tuple(parent), root=roots[0])


def ranked_pairs(g: MarginGraph, t: Tiebreaker, validate: bool = True) -> RankedPairsResult:
    """
    Run Ranked Pairs (cycle condition only)

    Returns:
        Locked edges and the unique source of the locked DAG
    """
    g.require_strict()
    if validate:
        validate_tiebreaker(g, t)

    out: List[List[int]] = [[] for _ in range(g.m)]
    locked = set()
    for x, y in t.order:
        if _reaches(out, y, x):
            continue
        out[x].append(y)
        locked.add((x, y))

    has_incoming = {y for _, y in locked}
    sources = [v for v in range(g.m) if v not in has_incoming]
    if len(sources) != 1:
        raise InternalInvariantViolation(f"Ranked Pairs locked graph has {len(sources)} sources")
    logger.debug(f"Ranked Pairs locked {len(locked)} edges, winner {sources[0]}")
    return RankedPairsResult(frozenset(locked), sources[0])


def _reaches(out: List[List[int]], start: int, target: int) -> bool:
    if start == target:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in out[v]:
            if w == target:
                return True
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False
