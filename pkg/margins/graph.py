"""
Margin graph storage
Complete antisymmetric integer-weighted digraph over the alternatives
"""
import json
import numbers
import string
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from errors import ConflictingEdge, NonStrictMarginGraph, SelfLoop, UnknownAlternative

Edge = Tuple[int, int]
WeightedEdge = Tuple[int, int, int]


def default_names(m: int) -> List[str]:
    """Letters for small graphs, a0..a{m-1} otherwise"""
    if m <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:m])
    return [f"a{i}" for i in range(m)]


class MarginGraph:
    """Immutable margin matrix plus positive-edge adjacency"""

    def __init__(self, margin: Union[np.ndarray, Sequence[Sequence[int]]], names: Optional[Sequence[str]] = None):
        """
        Args:
            margin: m x m antisymmetric integer matrix
            names: Display names, default_names(m) when omitted
        """
        matrix = np.array(margin, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"margin matrix must be square, got shape {matrix.shape}")
        if not np.array_equal(matrix, -matrix.T):
            raise ValueError("margin matrix must be antisymmetric with a zero diagonal")
        matrix.flags.writeable = False
        self._margin = matrix
        self.m = matrix.shape[0]
        self.names: List[str] = list(names) if names is not None else default_names(self.m)
        if len(self.names) != self.m or len(set(self.names)) != self.m:
            raise ValueError("names must be unique and one per alternative")

        self._out: List[List[Tuple[int, int]]] = [[] for _ in range(self.m)]
        self._in: List[List[Tuple[int, int]]] = [[] for _ in range(self.m)]
        for x, y in zip(*np.nonzero(matrix > 0)):
            w = int(matrix[x, y])
            self._out[int(x)].append((int(y), w))
            self._in[int(y)].append((int(x), w))
        self._positive: Optional[List[WeightedEdge]] = None

    @property
    def margin(self) -> np.ndarray:
        return self._margin

    def weight(self, x: int, y: int) -> int:
        return int(self._margin[x, y])

    def out_edges(self, v: int) -> List[Tuple[int, int]]:
        return self._out[v]

    def in_edges(self, v: int) -> List[Tuple[int, int]]:
        return self._in[v]

    @property
    def zero_pairs(self) -> int:
        return int((np.count_nonzero(self._margin == 0) - self.m) // 2)

    @property
    def strict(self) -> bool:
        return self.zero_pairs == 0

    def require_strict(self) -> None:
        if not self.strict:
            raise NonStrictMarginGraph(self.zero_pairs)

    def positive_edges(self) -> List[WeightedEdge]:
        """Edges with margin > 0, descending by weight, then lexicographic by (x, y)"""
        if self._positive is None:
            edges = [(x, y, w) for x in range(self.m) for y, w in self._out[x]]
            edges.sort(key=lambda e: (-e[2], e[0], e[1]))
            self._positive = edges
        return list(self._positive)

    def condorcet_winner(self) -> Optional[int]:
        if self.m == 0:
            return None
        wins = (self._margin > 0).sum(axis=1)
        winners = np.nonzero(wins == self.m - 1)[0]
        return int(winners[0]) if len(winners) else None

    def id_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownAlternative(name)

    def name_of(self, alt: int) -> str:
        return self.names[alt]

    def to_dict(self) -> Dict:
        return {
            "m": self.m,
            "names": list(self.names),
            "edges": [[x, y, w] for x, y, w in self.positive_edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict) -> "MarginGraph":
        return from_edges(data["m"], [tuple(e) for e in data["edges"]], names=data.get("names"))

    @classmethod
    def from_json(cls, text: Union[str, bytes]) -> "MarginGraph":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarginGraph):
            return NotImplemented
        return self.names == other.names and np.array_equal(self._margin, other._margin)

    def __hash__(self) -> int:
        return hash((tuple(self.names), self._margin.tobytes()))

    def __repr__(self) -> str:
        return f"MarginGraph(m={self.m}, edges={len(self.positive_edges())}, strict={self.strict})"


INT64_MAX = int(np.iinfo(np.int64).max)


def _integral(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (numbers.Integral, float)):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"{what} must be an integer, got {value!r}")
    value = int(value)
    if abs(value) > INT64_MAX:
        raise ValueError(f"{what} {value} is out of range")
    return value


def from_edges(m: int, edges: Iterable[WeightedEdge], names: Optional[Sequence[str]] = None) -> MarginGraph:
    """
    Build a margin graph directly from positive weighted edges

    Args:
        m: Number of alternatives
        edges: (x, y, w) with w > 0; at most one orientation per pair
        names: Optional display names

    Returns:
        MarginGraph; pairs not listed get margin zero
    """
    matrix = np.zeros((m, m), dtype=np.int64)
    for x, y, w in edges:
        x, y, w = _integral(x, "vertex"), _integral(y, "vertex"), _integral(w, "weight")
        if not (0 <= x < m and 0 <= y < m):
            raise ValueError(f"edge ({x},{y}) has a vertex outside 0..{m - 1}")
        if x == y:
            raise SelfLoop(x)
        if w <= 0:
            raise ValueError(f"edge ({x},{y}) needs a positive weight, got {w}")
        if matrix[x, y] != 0:
            raise ConflictingEdge(x, y)
        matrix[x, y] = w
        matrix[y, x] = -w
    return MarginGraph(matrix, names=names)


@dataclass(frozen=True)
class MPath:
    """Majority path with its strength (weakest margin)"""
    vertices: Tuple[int, ...]
    strength: int

    @classmethod
    def along(cls, g, vertices: Sequence[int]) -> "MPath":
        """
        Args:
            g: MarginGraph
            vertices: Distinct alternatives; every consecutive margin must be positive
        """
        vertices = tuple(vertices)
        if len(vertices) < 2:
            raise ValueError("a path needs at least two vertices")
        if len(set(vertices)) != len(vertices):
            raise ValueError("path vertices must be distinct")
        weights = [g.weight(u, v) for u, v in zip(vertices, vertices[1:])]
        if min(weights) <= 0:
            raise ValueError("every step of a majority path needs a positive margin")
        return cls(vertices, min(weights))
