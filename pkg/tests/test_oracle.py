"""
Tests for the brute-force universe enumeration
"""
import time

import pytest

from errors import NonStrictMarginGraph, RuleTimeout, UniverseLimitExceeded
from margins import from_edges
from oracle import UniverseEnumeration, brute_force_put, count_universes, enumerate_river_diagrams, tie_blocks
from river import river, validate_tiebreaker
from tests.graphs import tie_heavy_graphs

A, B, C, D, E = 0, 1, 2, 3, 4


def test_count_distinct_margins(strict_cycle):
    assert count_universes(strict_cycle) == 1


def test_count_equal_cycle(equal_cycle):
    assert count_universes(equal_cycle) == 6


def test_count_two_blocks():
    g = from_edges(4, [(A, B, 5), (B, C, 5), (C, A, 5), (D, A, 3), (D, B, 3), (C, D, 1)])
    assert [len(edges) for _, edges in tie_blocks(g)] == [3, 2, 1]
    assert count_universes(g) == 12


def test_enumeration_is_exhaustive_and_valid():
    for g in tie_heavy_graphs(seed=3, count=30, max_universes=1000):
        enumeration = UniverseEnumeration.of(g)
        orders = [t.order for t in enumeration]
        assert len(orders) == enumeration.universe_count
        assert len(set(orders)) == len(orders)
        for t in enumeration:
            assert validate_tiebreaker(g, t)


def test_slices_partition_universes():
    for g in tie_heavy_graphs(seed=9, count=10, max_universes=2000):
        enumeration = UniverseEnumeration.of(g)
        everything = {t.order for t in enumeration}
        parts = [{t.order for t in enumeration.slice(i, 3)} for i in range(3)]
        assert set().union(*parts) == everything
        assert sum(len(p) for p in parts) == len(everything)


def test_brute_force_river(equal_cycle, strict_cycle):
    assert brute_force_put(equal_cycle, "river") == {A, B, C}
    assert brute_force_put(strict_cycle, "river") == {A}


def test_brute_force_ranked_pairs(equal_cycle):
    assert brute_force_put(equal_cycle, "ranked_pairs") == {A, B, C}
    assert brute_force_put(equal_cycle, "ranked-pairs") == {A, B, C}


def test_universe_limit(equal_cycle):
    with pytest.raises(UniverseLimitExceeded) as info:
        brute_force_put(equal_cycle, "river", limit=5)
    assert info.value.count == 6


def test_non_strict_rejected():
    with pytest.raises(NonStrictMarginGraph):
        brute_force_put(from_edges(3, [(A, B, 1)]), "river")


def test_deadline(equal_cycle):
    with pytest.raises(RuleTimeout):
        brute_force_put(equal_cycle, "river", deadline=time.monotonic() - 1)


def test_fixed_tiebreaker_winner_contained_in_put_set():
    for g in tie_heavy_graphs(seed=21, count=20, max_universes=500):
        put = brute_force_put(g, "river")
        for t, diagram in enumerate_river_diagrams(g):
            assert diagram.root in put
            assert river(g, t).root == diagram.root


@pytest.mark.ray
def test_distributed_oracle_matches_sequential():
    from oracle.distributed_oracle import DistributedOracle

    oracle = DistributedOracle(num_workers=2)
    try:
        for g in tie_heavy_graphs(seed=5, count=5, max_universes=2000):
            assert oracle.brute_force_put(g, "river") == brute_force_put(g, "river")
    finally:
        oracle.shutdown()
