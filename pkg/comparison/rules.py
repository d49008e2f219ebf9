"""
Split Cycle and Beat Path winners from the strongest-path matrix
"""
from typing import Set

import numpy as np

from margins.graph import MarginGraph
from margins.paths import strongest_paths


def immune_alternatives(g: MarginGraph) -> Set[int]:
    """
    Alternatives that answer every defeat with a path at least as strong

    x is immune iff for every y with margin(y, x) > 0, strongest_paths[x][y] >= margin(y, x).
    """
    strength = strongest_paths(g)
    beaten_by = g.margin.T  # beaten_by[x][y] = margin(y, x)
    unanswered = (beaten_by > 0) & (strength < beaten_by)
    return {int(x) for x in np.nonzero(~unanswered.any(axis=1))[0]}


def split_cycle_winners(g: MarginGraph) -> Set[int]:
    return immune_alternatives(g)


def beat_path_winners(g: MarginGraph) -> Set[int]:
    """Schulze winners: s[x][y] >= s[y][x] for every y"""
    strength = strongest_paths(g)
    return {int(x) for x in np.nonzero((strength >= strength.T).all(axis=1))[0]}
