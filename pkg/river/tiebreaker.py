"""
Tiebreakers: descending linear orders of the positive-margin edges
"""
from dataclasses import dataclass
from typing import List, Tuple, Union

from errors import DuplicateEdge, EdgeNotInGraph, MalformedLine, MissingEdge, NotDescending
from margins.graph import MarginGraph

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Tiebreaker:
    """One universe: the order in which edges are offered to a rule"""
    order: Tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def to_list(self) -> List[List[int]]:
        return [[x, y] for x, y in self.order]


def validate_tiebreaker(g: MarginGraph, t: Tiebreaker) -> bool:
    """
    Check that t lists every positive edge of g exactly once, in descending margin order

    Raises:
        DuplicateEdge, EdgeNotInGraph, MissingEdge, NotDescending
    """
    seen = set()
    for x, y in t.order:
        if (x, y) in seen:
            raise DuplicateEdge((x, y))
        if not (0 <= x < g.m and 0 <= y < g.m) or g.weight(x, y) <= 0:
            raise EdgeNotInGraph((x, y))
        seen.add((x, y))

    for x, y, _ in g.positive_edges():
        if (x, y) not in seen:
            raise MissingEdge((x, y))

    for i in range(1, len(t.order)):
        if g.weight(*t.order[i]) > g.weight(*t.order[i - 1]):
            raise NotDescending(i)
    return True


def default_tiebreaker(g: MarginGraph) -> Tiebreaker:
    """Equal-margin edges in lexicographic order"""
    return Tiebreaker(tuple((x, y) for x, y, _ in g.positive_edges()))


def parse_tiebreaker(text: Union[str, bytes], g: MarginGraph) -> Tiebreaker:
    """
    Parse a tiebreaker file (one `x>y` per line, names) and validate it against g
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    order = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = [p.strip() for p in stripped.split(">")]
        if len(parts) != 2 or not all(parts):
            raise MalformedLine(line_no, "expected 'x>y'")
        order.append((g.id_of(parts[0]), g.id_of(parts[1])))
    t = Tiebreaker(tuple(order))
    validate_tiebreaker(g, t)
    return t


def format_tiebreaker(t: Tiebreaker, g: MarginGraph) -> str:
    return "".join(f"{g.name_of(x)}>{g.name_of(y)}\n" for x, y in t.order)
