import itertools
import math

import pytest

from morseideals import (
    bm_matching,
    bridge_friendly_list,
    bridge_minimal_search,
    build_taylor,
    cycle_edge_ideal,
    edge_ideal,
    enumerate_orders,
    is_bridge_friendly,
)
from morseideals.families import SimpleGraph
from morseideals.search import _chunk_bounds


def test_enumerate_orders_lexicographic():
    assert list(enumerate_orders(3)) == [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ]
    assert list(enumerate_orders(0)) == [()]


def test_chunks_partition_the_stream():
    total = math.factorial(5)
    stream = list(enumerate_orders(5))
    for chunk in (1, 7, 50, 200):
        bounds = _chunk_bounds(total, chunk)
        assert bounds[0][0] == 0 and bounds[-1][1] == total
        # each worker re-slices a fresh lexicographic stream; the chunks
        # glued back together must reproduce it exactly
        rebuilt = [
            p
            for start, stop in bounds
            for p in itertools.islice(enumerate_orders(5), start, stop)
        ]
        assert rebuilt == stream


def test_triangle_friendly_catalog(tri):
    pairs = bridge_friendly_list(tri)
    assert [perm for perm, _ in pairs] == list(enumerate_orders(3))
    for perm, matching in pairs:
        reordered = tri.reordered(perm)
        assert matching.edges == bm_matching(build_taylor(reordered)).edges
        assert is_bridge_friendly(build_taylor(reordered))
        assert len(matching) == 1
        # the single edge pairs the full cell with the two larger generators
        assert matching.edges[0] == (0b111, 0b110)


def test_run4_has_no_friendly_order(run4):
    assert bridge_friendly_list(run4) == []


def test_search_guard():
    path11 = edge_ideal(SimpleGraph(12, tuple((i, i + 1) for i in range(1, 12))))
    assert path11.n == 11
    with pytest.raises(ValueError, match="guard"):
        bridge_friendly_list(path11)
    with pytest.raises(ValueError, match="guard"):
        bridge_minimal_search(path11)


def test_minimal_search_triangle(tri):
    result = bridge_minimal_search(tri)
    assert result.order == (0, 1, 2)
    assert result.ranks == (1, 3, 2, 0)
    assert result.orders_tried == 1


def test_minimal_search_run4(run4):
    result = bridge_minimal_search(run4)
    assert result.order == (0, 1, 2, 3)
    assert result.ranks == (1, 4, 4, 1, 0)


def test_minimal_search_modes_agree(run4, tri):
    for ideal in (run4, tri):
        first = bridge_minimal_search(ideal, mode="first-hit")
        full = bridge_minimal_search(ideal, mode="exhaustive")
        assert first.order == full.order
        assert first.ranks == full.ranks
        assert full.orders_tried == math.factorial(ideal.n)


def test_minimal_search_limit(run4):
    capped = bridge_minimal_search(cycle_edge_ideal(5), limit=0)
    assert capped.order is None and capped.orders_tried == 0
    assert capped.orders_total == math.factorial(5)


def test_worker_counts_do_not_change_results(tri):
    c4 = cycle_edge_ideal(4)
    c5 = cycle_edge_ideal(5)
    base_list = bridge_friendly_list(c5, workers=1)
    base_search = bridge_minimal_search(c4, workers=1)
    for workers in (2, 8):
        same_list = bridge_friendly_list(c5, workers=workers)
        assert [(p, m.edges) for p, m in same_list] == [
            (p, m.edges) for p, m in base_list
        ]
        same_search = bridge_minimal_search(c4, workers=workers)
        assert (same_search.order, same_search.ranks) == (
            base_search.order,
            base_search.ranks,
        )


def test_friendly_hits_verified_publicly():
    c5 = cycle_edge_ideal(5)
    pairs = bridge_friendly_list(c5)
    assert len(pairs) == 90
    seen = set()
    for perm, matching in pairs:
        assert perm not in seen
        seen.add(perm)
        reordered = c5.reordered(perm)
        assert is_bridge_friendly(build_taylor(reordered))
        assert matching.edges == bm_matching(build_taylor(reordered)).edges
