"""
Winning certificates
DirectedMaxPrim tree inside the FUN diagram plus the tiebreaker that replays it as a River diagram
"""
import heapq
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from loguru import logger

from errors import EdgeNotInGraph, UnknownAlternative
from fun.diagram import FunDiagram, fun_diagram
from margins.graph import MarginGraph
from river.river import RiverDiagram, river
from river.tiebreaker import Tiebreaker

Edge = Tuple[int, int]


@dataclass(frozen=True)
class CertificateTree:
    """Directed tree rooted at root; parent[v] = (parent, margin), None for the root"""
    root: int
    parent: Dict[int, Optional[Tuple[int, int]]]

    def vertices(self) -> List[int]:
        return sorted(self.parent)

    def edges(self) -> List[Tuple[int, int, int]]:
        return sorted((p[0], v, p[1]) for v, p in self.parent.items() if p is not None)

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset((p[0], v) for v, p in self.parent.items() if p is not None)

    def spans(self, m: int) -> bool:
        return len(self.parent) == m

    def path_to(self, b: int) -> List[int]:
        """Tree path root -> b"""
        if b not in self.parent:
            raise KeyError(b)
        path = [b]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]][0])
        return path[::-1]

    def path_strength(self, b: int) -> int:
        """Weakest margin on the tree path root -> b; 0 for the root itself"""
        weights = []
        v = b
        while self.parent[v] is not None:
            p, w = self.parent[v]
            weights.append(w)
            v = p
        return min(weights) if weights else 0


@dataclass(frozen=True)
class Certificate:
    ok: bool
    tree: CertificateTree
    tiebreaker: Tiebreaker
    replay: RiverDiagram

    def to_dict(self, names: List[str]) -> Dict:
        return {
            "winner": names[self.tree.root],
            "tree": [[names[u], names[v], w] for u, v, w in self.tree.edges()],
            "tiebreaker": [[names[x], names[y]] for x, y in self.tiebreaker.order],
            "verified": self.ok,
        }


def directed_max_prim(d: FunDiagram, a: int) -> CertificateTree:
    """
    Grow a tree from a by always taking a maximum-margin crossing edge of the diagram

    Ties between crossing edges of equal margin go to the lexicographically smallest (u, v).
    """
    parent: Dict[int, Optional[Tuple[int, int]]] = {a: None}
    heap = [(-w, a, v) for v, w in d.out_edges(a)]
    heapq.heapify(heap)
    while heap:
        neg_w, u, v = heapq.heappop(heap)
        if v in parent:
            continue
        parent[v] = (u, -neg_w)
        for z, w in d.out_edges(v):
            if z not in parent:
                heapq.heappush(heap, (-w, v, z))
    return CertificateTree(root=a, parent=parent)


def certificate_tiebreaker(g: MarginGraph, tree: CertificateTree) -> Tiebreaker:
    """Descending margins; inside an equal-margin block tree edges come first, then lexicographic"""
    tree_edges = tree.edge_set()
    for x, y in tree_edges:
        if g.weight(x, y) <= 0:
            raise EdgeNotInGraph((x, y))
    ordered = sorted(
        g.positive_edges(),
        key=lambda e: (-e[2], 0 if (e[0], e[1]) in tree_edges else 1, e[0], e[1]),
    )
    return Tiebreaker(tuple((x, y) for x, y, _ in ordered))


def verify_certificate(g: MarginGraph, a: int, diagram: Optional[FunDiagram] = None) -> Certificate:
    """
    Replay River under the certificate tiebreaker of a

    Args:
        g: Strict margin graph
        a: Alternative to certify
        diagram: FUN diagram of g; computed when omitted

    Returns:
        Certificate with ok=True iff the replayed River diagram is the tree and a wins
    """
    if not 0 <= a < g.m:
        raise UnknownAlternative(str(a))
    g.require_strict()
    d = diagram if diagram is not None else fun_diagram(g)
    tree = directed_max_prim(d, a)
    tiebreaker = certificate_tiebreaker(g, tree)
    replay = river(g, tiebreaker, validate=False)
    ok = replay.root == a and replay.edge_set() == tree.edge_set()
    logger.debug(f"Certificate for {g.name_of(a)}: verified={ok}")
    return Certificate(ok=ok, tree=tree, tiebreaker=tiebreaker, replay=replay)


def certify_all(g: MarginGraph) -> List[Certificate]:
    """One certificate per alternative, sharing a single FUN diagram"""
    d = fun_diagram(g)
    return [verify_certificate(g, a, diagram=d) for a in range(g.m)]
