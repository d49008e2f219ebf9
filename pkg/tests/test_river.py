"""
Tests for tiebreakers, River and Ranked Pairs
"""
import numpy as np
import pytest

from errors import DuplicateEdge, EdgeNotInGraph, MalformedLine, MissingEdge, NonStrictMarginGraph, NotDescending
from margins import from_edges
from oracle import UniverseEnumeration
from river import (
    Tiebreaker,
    default_tiebreaker,
    format_tiebreaker,
    parse_tiebreaker,
    ranked_pairs,
    river,
    validate_tiebreaker,
)
from tests.graphs import random_strict_graph

A, B, C, D = 0, 1, 2, 3


def test_validate_unique_order(strict_cycle):
    assert validate_tiebreaker(strict_cycle, Tiebreaker(((A, B), (B, C), (C, A))))


def test_validate_not_descending(strict_cycle):
    with pytest.raises(NotDescending) as info:
        validate_tiebreaker(strict_cycle, Tiebreaker(((B, C), (A, B), (C, A))))
    assert info.value.index == 1


def test_validate_missing_edge(strict_cycle):
    with pytest.raises(MissingEdge) as info:
        validate_tiebreaker(strict_cycle, Tiebreaker(((A, B), (B, C))))
    assert info.value.edge == (C, A)


def test_validate_duplicate_edge(strict_cycle):
    with pytest.raises(DuplicateEdge):
        validate_tiebreaker(strict_cycle, Tiebreaker(((A, B), (A, B), (B, C), (C, A))))


def test_validate_edge_not_in_graph(strict_cycle):
    with pytest.raises(EdgeNotInGraph):
        validate_tiebreaker(strict_cycle, Tiebreaker(((A, B), (B, C), (A, C))))


def test_river_strict_cycle(strict_cycle):
    diagram = river(strict_cycle, default_tiebreaker(strict_cycle))
    assert diagram.edge_set() == {(A, B), (B, C)}
    assert diagram.root == A


def test_river_branching_condition(branching_graph):
    diagram = river(branching_graph, default_tiebreaker(branching_graph))
    assert diagram.edges() == [(A, B, 3), (A, C, 1)]
    assert diagram.root == A


def test_river_condorcet_star_every_universe(condorcet_star):
    for t in UniverseEnumeration.of(condorcet_star):
        assert river(condorcet_star, t).root == A


def test_ranked_pairs_strict_cycle(strict_cycle):
    result = ranked_pairs(strict_cycle, default_tiebreaker(strict_cycle))
    assert result.locked == {(A, B), (B, C)}
    assert result.winner == A


def test_ranked_pairs_keeps_branching_edges(branching_graph):
    result = ranked_pairs(branching_graph, default_tiebreaker(branching_graph))
    assert result.locked == {(A, B), (C, B), (A, C)}
    assert result.winner == A


def test_ranked_pairs_condorcet_star_every_universe(condorcet_star):
    for t in UniverseEnumeration.of(condorcet_star):
        assert ranked_pairs(condorcet_star, t).winner == A


def test_river_requires_strict_graph():
    g = from_edges(3, [(A, B, 1), (B, C, 1)])
    with pytest.raises(NonStrictMarginGraph):
        river(g, default_tiebreaker(g))
    with pytest.raises(NonStrictMarginGraph):
        ranked_pairs(g, default_tiebreaker(g))


def test_river_diagram_is_spanning_tree():
    rng = np.random.default_rng(2)
    for _ in range(50):
        g = random_strict_graph(rng, int(rng.integers(2, 9)), [1, 3, 5, 7])
        t = default_tiebreaker(g)
        diagram = river(g, t)
        assert len(diagram.edges()) == g.m - 1
        children = [child for _, child, _ in diagram.edges()]
        assert len(children) == len(set(children))
        assert diagram.root not in children
        # every vertex walks up to the root
        for v in range(g.m):
            seen = set()
            while diagram.parent[v] is not None:
                assert v not in seen
                seen.add(v)
                v = diagram.parent[v][0]
            assert v == diagram.root
        assert river(g, t) == diagram


def test_river_and_ranked_pairs_agree_on_condorcet_winner():
    rng = np.random.default_rng(8)
    checked = 0
    while checked < 30:
        g = random_strict_graph(rng, 5, [1, 3, 5])
        w = g.condorcet_winner()
        if w is None:
            continue
        t = default_tiebreaker(g)
        assert river(g, t).root == w
        assert ranked_pairs(g, t).winner == w
        checked += 1


def test_tiebreaker_file_round_trip(equal_cycle):
    t = parse_tiebreaker("# universe\nb>c\nc>a\na>b\n", equal_cycle)
    assert t.order == ((B, C), (C, A), (A, B))
    assert format_tiebreaker(t, equal_cycle) == "b>c\nc>a\na>b\n"
    assert river(equal_cycle, t).root == B


def test_tiebreaker_file_malformed(equal_cycle):
    with pytest.raises(MalformedLine):
        parse_tiebreaker("a-b\n", equal_cycle)


def test_tiebreaker_file_validated(strict_cycle):
    with pytest.raises(NotDescending):
        parse_tiebreaker("b>c\na>b\nc>a\n", strict_cycle)


def test_diagram_to_dict(strict_cycle):
    diagram = river(strict_cycle, default_tiebreaker(strict_cycle))
    assert diagram.to_dict(strict_cycle.names) == {"root": "a", "edges": [["a", "b", 3], ["b", "c", 2]]}
