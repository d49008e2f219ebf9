"""
Tests for the margin-graph kernel
"""
from itertools import permutations

import numpy as np
import pytest

from errors import ConflictingEdge, NonStrictMarginGraph, SelfLoop
from margins import MarginGraph, MPath, from_edges, reachable_above, strongest_paths
from profiles import margins, parse_profile
from tests.graphs import random_strict_graph

A, B, C, D = 0, 1, 2, 3


def test_from_edges_builds_strict_cycle(strict_cycle):
    assert strict_cycle.strict
    assert strict_cycle.weight(A, B) == 3
    assert strict_cycle.weight(B, A) == -3
    assert strict_cycle.names == ["a", "b", "c"]


def test_conflicting_edge():
    with pytest.raises(ConflictingEdge):
        from_edges(2, [(A, B, 1), (B, A, 1)])


def test_self_loop():
    with pytest.raises(SelfLoop):
        from_edges(2, [(A, A, 1)])


def test_partial_graph_is_not_strict():
    g = from_edges(3, [(A, B, 1)])
    assert not g.strict
    assert g.zero_pairs == 2
    with pytest.raises(NonStrictMarginGraph):
        g.require_strict()


def test_matrix_must_be_antisymmetric():
    with pytest.raises(ValueError):
        MarginGraph([[0, 1], [1, 0]])


def test_margin_matrix_is_read_only(strict_cycle):
    with pytest.raises(ValueError):
        strict_cycle.margin[0, 1] = 7


def test_positive_edges_descending(strict_cycle):
    assert strict_cycle.positive_edges() == [(A, B, 3), (B, C, 2), (C, A, 1)]


def test_positive_edges_skip_zero_margins():
    g = from_edges(3, [(B, C, 2), (A, C, 1)])
    assert g.positive_edges() == [(B, C, 2), (A, C, 1)]


def test_positive_edges_lexicographic_within_ties(equal_cycle):
    assert equal_cycle.positive_edges() == [(A, B, 1), (B, C, 1), (C, A, 1)]


def test_reachable_above(strict_cycle):
    assert reachable_above(strict_cycle, A, 1) == {A, B, C}
    assert reachable_above(strict_cycle, A, 2) == {A, B}
    assert reachable_above(strict_cycle, A, 3) == {A}
    assert reachable_above(strict_cycle, C, 1, mode="reverse") == {A, B, C}


def test_reachable_above_exclusions(strict_cycle):
    assert reachable_above(strict_cycle, A, 0, excluded_edges={(B, C)}) == {A, B}
    assert reachable_above(strict_cycle, A, 2, inclusive=True) == {A, B, C}
    assert reachable_above(strict_cycle, A, 0, avoid=B) == {A}


def test_reachable_above_is_monotone():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = random_strict_graph(rng, 6, [1, 3, 5, 7, 9])
        previous = None
        for threshold in range(0, 11):
            current = reachable_above(g, 0, threshold)
            if previous is not None:
                assert current <= previous
            previous = current
        assert previous == {0}


def test_strongest_paths_strict_cycle(strict_cycle):
    s = strongest_paths(strict_cycle)
    assert s[A][C] == 2
    assert s[C][B] == 1
    assert s[B][A] == 1
    assert s[A][B] == 3
    assert all(s[x][x] == 0 for x in range(3))


def test_strongest_paths_condorcet_star(condorcet_star):
    s = strongest_paths(condorcet_star)
    for x in (B, C, D):
        assert s[A][x] == condorcet_star.weight(A, x)
        assert s[x][A] == 0


def _brute_strongest(g):
    s = np.zeros((g.m, g.m), dtype=int)
    for length in range(2, g.m + 1):
        for path in permutations(range(g.m), length):
            weights = [g.weight(u, v) for u, v in zip(path, path[1:])]
            if min(weights) > 0:
                s[path[0], path[-1]] = max(s[path[0], path[-1]], min(weights))
    return s


def test_strongest_paths_match_path_enumeration():
    rng = np.random.default_rng(17)
    for _ in range(40):
        g = random_strict_graph(rng, int(rng.integers(2, 6)), [1, 2, 3, 5, 8])
        assert np.array_equal(strongest_paths(g), _brute_strongest(g))


def test_strongest_paths_properties():
    rng = np.random.default_rng(23)
    for _ in range(20):
        g = random_strict_graph(rng, 7, [1, 3, 5])
        s = strongest_paths(g)
        positive = g.margin > 0
        assert np.all(s[positive] >= g.margin[positive])
        relaxed = s.copy()
        for k in range(g.m):
            relaxed = np.maximum(relaxed, np.minimum(relaxed[:, k:k + 1], relaxed[k:k + 1, :]))
        np.fill_diagonal(relaxed, 0)
        assert np.array_equal(relaxed, s)


def test_condorcet_winner():
    assert margins(parse_profile("3: a,b,c")).condorcet_winner() == A
    assert margins(parse_profile("a,b,c\nb,c,a\nc,a,b")).condorcet_winner() is None


def test_no_condorcet_winner_in_cycle(strict_cycle):
    assert strict_cycle.condorcet_winner() is None


def test_json_round_trip(branching_graph):
    data = branching_graph.to_dict()
    assert data == {"m": 3, "names": ["a", "b", "c"], "edges": [[0, 1, 3], [2, 1, 2], [0, 2, 1]]}
    assert MarginGraph.from_json(branching_graph.to_json()) == branching_graph


def test_mpath_strength(strict_cycle):
    path = MPath.along(strict_cycle, [A, B, C])
    assert path.strength == 2
    with pytest.raises(ValueError):
        MPath.along(strict_cycle, [B, A])


@pytest.mark.parametrize("edges", [
    [(0, 1, 1.9), (1, 2, 1.2), (2, 0, 1.0)],
    [(0, 1, "3"), (1, 2, 2), (2, 0, 1)],
    [(0, 1, True), (1, 2, 2), (2, 0, 1)],
    [(0, 1, 2 ** 63), (1, 2, 2), (2, 0, 1)],
    [(0, 1, 3), (1, 2, 2), (2, -1, 1)],
    [(0, 1, 3), (1, 2, 2), (2, 3, 1)],
])
def test_from_edges_rejects_non_integral_input(edges):
    with pytest.raises(ValueError):
        from_edges(3, edges)


def test_from_edges_accepts_integral_floats(strict_cycle):
    assert from_edges(3, [(0, 1, 3.0), (1, 2, 2.0), (2, 0, 1.0)]) == strict_cycle
