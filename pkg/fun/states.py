"""
Edge and vertex states of the fused-universe diagram
"""
from enum import Enum


class EdgeState(str, Enum):
    """How an accepted edge survives across universes"""
    FIX = "Fix"   # present in every universe
    BC = "BC"     # branching choice among equal-margin edges into the same target
    CC = "CC"     # cycle choice: part of a cycle whose weakest edges compete
    CBC = "CBC"   # branching choice behind a cycle-choice edge of larger margin

    def __str__(self) -> str:
        return self.value


class VertexState(str, Enum):
    NOT_DOMINATED = "NotDominated"
    FIXEDLY_DOMINATED = "FixedlyDominated"
    CYCLE_DOMINATED = "CycleDominated"

    def __str__(self) -> str:
        return self.value

    @property
    def can_win(self) -> bool:
        return self is not VertexState.FIXEDLY_DOMINATED
