"""
Path queries on margin graphs and diagrams
Threshold reachability and the maximin strongest-path matrix
"""
from collections import deque
from typing import Callable, Iterable, Optional, Set, Tuple

import numpy as np

Edge = Tuple[int, int]
EdgeFilter = Callable[[int, int, int], bool]


def reachable(graph, start: int, edge_ok: EdgeFilter, mode: str = "forward") -> Set[int]:
    """
    Breadth-first search over edges accepted by edge_ok(u, v, w)

    The graph needs out_edges(v) and in_edges(v) yielding (neighbor, margin).
    In reverse mode the search collects vertices that reach start.
    """
    if mode not in ("forward", "reverse"):
        raise ValueError(f"mode must be 'forward' or 'reverse', got {mode!r}")
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if mode == "forward":
            for w, weight in graph.out_edges(v):
                if w not in seen and edge_ok(v, w, weight):
                    seen.add(w)
                    queue.append(w)
        else:
            for u, weight in graph.in_edges(v):
                if u not in seen and edge_ok(u, v, weight):
                    seen.add(u)
                    queue.append(u)
    return seen


def reachable_above(graph, start: int, threshold: int, mode: str = "forward",
                    excluded_edges: Optional[Iterable[Edge]] = None,
                    inclusive: bool = False, avoid: Optional[int] = None) -> Set[int]:
    """
    Vertices reachable from start over edges with margin > threshold

    Args:
        graph: MarginGraph or FunDiagram
        start: Start vertex, always in the result
        threshold: Margin bound
        mode: 'forward' or 'reverse'
        excluded_edges: Edges (u, v) never traversed
        inclusive: Accept margin == threshold as well
        avoid: Skip every edge incident to this vertex

    Returns:
        Set of alternative ids
    """
    excluded = set(excluded_edges) if excluded_edges else set()

    def edge_ok(u: int, v: int, w: int) -> bool:
        if w < threshold or (w == threshold and not inclusive):
            return False
        if avoid is not None and (u == avoid or v == avoid):
            return False
        return (u, v) not in excluded

    return reachable(graph, start, edge_ok, mode)


def strongest_paths(g) -> np.ndarray:
    """
    Maximin closure of the positive margins

    Returns:
        m x m int matrix; entry [x][y] is the strongest majority path x -> y, 0 without a path
    """
    strength = np.where(g.margin > 0, g.margin, 0).astype(np.int64)
    for k in range(g.m):
        strength = np.maximum(strength, np.minimum(strength[:, k:k + 1], strength[k:k + 1, :]))
    np.fill_diagonal(strength, 0)
    return strength
