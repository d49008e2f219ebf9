"""
Preference profiles over a fixed set of alternatives
Ballots are linear orders with integer multiplicities
"""
from collections import Counter
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from errors import DuplicateAlternativeInRanking, EmptyProfile, UnknownAlternative
from margins.graph import MarginGraph

# margins are accumulated in int64
MAX_VOTERS = 2 ** 63 - 1


@dataclass(frozen=True)
class Alternative:
    """A candidate with a dense integer id"""
    id: int
    name: str


class Ballot(NamedTuple):
    multiplicity: int
    ranking: Tuple[int, ...]


@dataclass(frozen=True)
class PreferenceProfile:
    """Immutable multiset of linear orders"""
    alternatives: Tuple[Alternative, ...]
    ballots: Tuple[Ballot, ...]

    def __post_init__(self):
        m = len(self.alternatives)
        if [a.id for a in self.alternatives] != list(range(m)):
            raise ValueError("alternative ids must be 0..m-1 in order")
        names = [a.name for a in self.alternatives]
        if len(set(names)) != m:
            raise ValueError("alternative names must be unique")
        if not self.ballots:
            raise EmptyProfile()
        for ballot in self.ballots:
            if ballot.multiplicity < 1:
                raise ValueError(f"multiplicity must be positive, got {ballot.multiplicity}")
            if len(ballot.ranking) != m or set(ballot.ranking) != set(range(m)):
                seen = set()
                for alt in ballot.ranking:
                    if alt in seen:
                        raise DuplicateAlternativeInRanking(self.name_of(alt) if 0 <= alt < m else str(alt))
                    if not 0 <= alt < m:
                        raise UnknownAlternative(str(alt))
                    seen.add(alt)
                raise ValueError("ranking does not cover every alternative")
        if self.n > MAX_VOTERS:
            raise ValueError(f"voter count {self.n} exceeds {MAX_VOTERS}")

    @classmethod
    def from_rankings(cls, names: Sequence[str], rankings: Sequence[Sequence[int]]) -> "PreferenceProfile":
        """Build a profile with one ballot of multiplicity 1 per ranking"""
        return cls(
            alternatives=tuple(Alternative(i, name) for i, name in enumerate(names)),
            ballots=tuple(Ballot(1, tuple(int(x) for x in r)) for r in rankings),
        )

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return sum(b.multiplicity for b in self.ballots)

    @property
    def names(self) -> List[str]:
        return [a.name for a in self.alternatives]

    def name_of(self, alt: int) -> str:
        return self.alternatives[alt].name

    def compressed(self) -> "PreferenceProfile":
        """Merge identical rankings, keeping first-appearance order"""
        counts: Counter = Counter()
        order: List[Tuple[int, ...]] = []
        for ballot in self.ballots:
            if ballot.ranking not in counts:
                order.append(ballot.ranking)
            counts[ballot.ranking] += ballot.multiplicity
        return PreferenceProfile(
            alternatives=self.alternatives,
            ballots=tuple(Ballot(counts[r], r) for r in order),
        )


def margins(profile: PreferenceProfile) -> MarginGraph:
    """
    Compute the pairwise margin graph of a profile

    Args:
        profile: Preference profile

    Returns:
        MarginGraph with margin[x][y] = #(x over y) - #(y over x), multiplicities counted
    """
    m = profile.m
    matrix = np.zeros((m, m), dtype=np.int64)
    for ballot in profile.ballots:
        position = np.empty(m, dtype=np.int64)
        position[list(ballot.ranking)] = np.arange(m)
        # +1 where x is ranked above y
        matrix += ballot.multiplicity * np.sign(position[None, :] - position[:, None])
    return MarginGraph(matrix, names=profile.names)
