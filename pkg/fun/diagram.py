"""
Fused-universe (FUN) diagram
Simulates River over every tiebreaker at once and reads off the PUT winners
"""
from itertools import groupby
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
from loguru import logger

from errors import BadEdgeOrder, InternalInvariantViolation, VotingError
from fun.states import EdgeState, VertexState
from margins.graph import MarginGraph, from_edges
from margins.paths import reachable, reachable_above
from river.tiebreaker import Tiebreaker, validate_tiebreaker

Edge = Tuple[int, int]


def _any_edge(u: int, v: int, w: int) -> bool:
    return True


class FunDiagram:
    """
    Subgraph of the margin graph with a state on every edge.

    Read-only once returned by fun_diagram(); the underscored mutators are
    used while the diagram is being built.
    """

    def __init__(self, m: int, names: Sequence[str]):
        self.m = m
        self.names = list(names)
        self._weight: Dict[Edge, int] = {}
        self._state: Dict[Edge, EdgeState] = {}
        self._out: List[List[Tuple[int, int]]] = [[] for _ in range(m)]
        self._in: List[List[Tuple[int, int]]] = [[] for _ in range(m)]
        self.rejections: Dict[Edge, str] = {}

    # graph protocol used by margins.paths

    def out_edges(self, v: int) -> List[Tuple[int, int]]:
        return self._out[v]

    def in_edges(self, v: int) -> List[Tuple[int, int]]:
        return self._in[v]

    # queries

    def __contains__(self, edge: Edge) -> bool:
        return edge in self._state

    def __len__(self) -> int:
        return len(self._state)

    def state(self, x: int, y: int) -> EdgeState:
        return self._state[(x, y)]

    def weight(self, x: int, y: int) -> int:
        return self._weight[(x, y)]

    def edges(self) -> List[Tuple[int, int, int, EdgeState]]:
        """(x, y, margin, state), descending margin then lexicographic"""
        return sorted(
            ((x, y, self._weight[(x, y)], s) for (x, y), s in self._state.items()),
            key=lambda e: (-e[2], e[0], e[1]),
        )

    def incoming(self, v: int) -> List[Tuple[int, int, EdgeState]]:
        return [(z, w, self._state[(z, v)]) for z, w in self._in[v]]

    def vertex_state(self, v: int) -> VertexState:
        states = [s for _, _, s in self.incoming(v)]
        if not states:
            return VertexState.NOT_DOMINATED
        if all(s is EdgeState.CC for s in states):
            return VertexState.CYCLE_DOMINATED
        return VertexState.FIXEDLY_DOMINATED

    def vertex_states(self) -> List[VertexState]:
        return [self.vertex_state(v) for v in range(self.m)]

    def winners(self) -> Set[int]:
        return {v for v in range(self.m) if self.vertex_state(v).can_win}

    def to_margin_graph(self) -> MarginGraph:
        """The diagram's edges as a (non-strict) margin graph"""
        return from_edges(self.m, [(x, y, w) for (x, y), w in self._weight.items()], names=self.names)

    # construction

    def _add(self, x: int, y: int, weight: int, state: EdgeState) -> None:
        self._weight[(x, y)] = weight
        self._state[(x, y)] = state
        self._out[x].append((y, weight))
        self._in[y].append((x, weight))

    def _set_state(self, x: int, y: int, state: EdgeState) -> None:
        self._state[(x, y)] = state

    def __repr__(self) -> str:
        return f"FunDiagram(m={self.m}, edges={len(self._state)}, winners={sorted(self.winners())})"


def vertex_state(d: FunDiagram, v: int) -> VertexState:
    return d.vertex_state(v)


def _edge_order(g: MarginGraph, edge_order) -> List[Edge]:
    if edge_order is None:
        return [(x, y) for x, y, _ in g.positive_edges()]
    t = edge_order if isinstance(edge_order, Tiebreaker) else Tiebreaker(tuple(tuple(e[:2]) for e in edge_order))
    try:
        validate_tiebreaker(g, t)
    except VotingError as e:
        raise BadEdgeOrder(str(e))
    return list(t.order)


def shuffled_edge_order(g: MarginGraph, seed: int) -> List[Edge]:
    """Descending edge order with every equal-margin block permuted by a seeded Generator"""
    rng = np.random.default_rng(seed)
    order: List[Edge] = []
    for _, block in groupby(g.positive_edges(), key=lambda e: e[2]):
        block = [(x, y) for x, y, _ in block]
        order.extend(block[i] for i in rng.permutation(len(block)))
    return order


def _branching_reject(d: FunDiagram, y: int, k: int) -> bool:
    # y is fixedly dominated by a larger edge in every universe
    return any(s is not EdgeState.CC and w > k for _, w, s in d.incoming(y))


def _cycle_reject(d: FunDiagram, x: int, y: int, k: int) -> bool:
    if x not in reachable_above(d, y, k):
        return False

    upstream = reachable_above(d, x, k, mode="reverse")

    # CC edges (c, e) that keep an alternative e -> c path of strength >= their margin without y
    bypassed = set()
    for (c, e), state in d._state.items():
        w = d._weight[(c, e)]
        if state is not EdgeState.CC or w <= k:
            continue
        if c in reachable_above(d, e, w, inclusive=True, avoid=y):
            bypassed.add((c, e))

    covered = reachable_above(d, y, k, excluded_edges=bypassed)
    return upstream <= covered


def _assign_state(d: FunDiagram, y: int, k: int) -> EdgeState:
    target = d.vertex_state(y)
    if target is VertexState.NOT_DOMINATED:
        return EdgeState.FIX
    incoming = d.incoming(y)
    if target is VertexState.CYCLE_DOMINATED:
        if any(w > k for _, w, _ in incoming):
            return EdgeState.CBC
        return EdgeState.BC
    for z, _, s in incoming:
        if s is EdgeState.FIX:
            d._set_state(z, y, EdgeState.BC)
    return EdgeState.BC


def _cycle_update(d: FunDiagram, x: int, y: int, k: int) -> None:
    downstream = reachable(d, y, _any_edge)
    upstream = reachable(d, x, _any_edge, mode="reverse")
    closing = [(u, v, w) for u in downstream for v, w in d.out_edges(u) if v in upstream]
    if not closing:
        return
    d._set_state(x, y, EdgeState.CC)
    for u, v, w in closing:
        if w == k:
            d._set_state(u, v, EdgeState.CC)


def fun_diagram(g: MarginGraph, edge_order: Optional[Union[Tiebreaker, Iterable[Edge]]] = None) -> FunDiagram:
    """
    Build the fused-universe diagram

    Args:
        g: Strict margin graph
        edge_order: Optional descending order of the positive edges; equal-margin
            blocks may be permuted. Defaults to positive_edges() order.

    Returns:
        FunDiagram with final edge states
    """
    g.require_strict()
    order = _edge_order(g, edge_order)
    d = FunDiagram(g.m, g.names)

    for x, y in order:
        k = g.weight(x, y)
        if _branching_reject(d, y, k):
            d.rejections[(x, y)] = "branching"
            logger.debug(f"({x},{y}) margin {k}: rejected by branching check")
            continue
        if _cycle_reject(d, x, y, k):
            d.rejections[(x, y)] = "cycle"
            logger.debug(f"({x},{y}) margin {k}: rejected by cycle check")
            continue
        state = _assign_state(d, y, k)
        d._add(x, y, k, state)
        _cycle_update(d, x, y, k)
        logger.debug(f"({x},{y}) margin {k}: added as {d.state(x, y)}")

    logger.debug(f"FUN diagram computed: {len(d)} edges kept, {len(d.rejections)} rejected")
    return d


def rv_put_winners(g: MarginGraph, edge_order: Optional[Union[Tiebreaker, Iterable[Edge]]] = None) -> Set[int]:
    """Alternatives that win River under at least one tiebreaker"""
    return fun_diagram(g, edge_order).winners()


def tie_order_divergence(g: MarginGraph, seeds: Iterable[int]) -> List[int]:
    """
    Seeds whose shuffled equal-margin order yields a different diagram than the default order

    The winner set is order-independent; the edges and their states need not be.
    Raises InternalInvariantViolation if a shuffle changes the winners.
    """
    reference = fun_diagram(g)
    divergent = []
    for seed in seeds:
        d = fun_diagram(g, shuffled_edge_order(g, seed))
        if d.winners() != reference.winners():
            raise InternalInvariantViolation(f"winner set changed under tie order seed {seed}")
        if d.edges() != reference.edges():
            logger.warning(f"FUN diagram differs from the default order under tie order seed {seed}")
            divergent.append(seed)
    return divergent
