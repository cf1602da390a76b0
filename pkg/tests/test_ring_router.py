import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import ring, ring_dist
from vqlnet.entanglement import EntanglementLedger
from vqlnet.errors import InputError, ResourceError
from vqlnet.graph import is_path
from vqlnet.ring_router import (RouteRequest, SwapEvent, best_move, path2, required_edges,
                                ring_path, ring_route, ring_route_step)


def test_best_move_examples():
    rng = random.Random(0)
    assert best_move(37, ring(6), rng) == 36
    assert best_move(36, ring(6), rng) == 32
    assert best_move(8, ring(4), rng) == 0


def test_best_move_wrap_does_not_draw():
    rng = random.Random(3)
    state = rng.getstate()
    best_move(8, ring(4), rng)
    assert rng.getstate() == state


def test_path2():
    assert path2(0, 2, ring(2)) == [0, 2]
    assert path2(1, 3, ring(4)) == [1, 2, 3]
    assert path2(0, 37, ring(6)) is None
    with pytest.raises(InputError):
        path2(4, 4, ring(4))


@pytest.mark.parametrize("n", range(2, 8))
def test_path2_matches_distance(n):
    d = ring_dist(n)
    size = 1 << n
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            p = path2(a, b, ring(n))
            if d[a][b] <= 2:
                assert p is not None and len(p) - 1 == d[a][b] and is_path(ring(n), p)
            else:
                assert p is None


def test_ring_path_example():
    assert ring_path(0, 37, ring(6), random.Random(1)) == [0, 32, 36, 37]
    assert ring_path(0, 1, ring(6), random.Random(1)) == [0, 1]
    assert ring_path(5, 5, ring(6), random.Random(1)) == [5]


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 9), st.data(), st.integers(0, 2**32))
def test_ring_path_is_shortest(n, data, seed):
    size = 1 << n
    a = data.draw(st.integers(0, size - 1))
    b = data.draw(st.integers(0, size - 1))
    p = ring_path(a, b, ring(n), random.Random(seed))
    assert p[0] == a and p[-1] == b and is_path(ring(n), p)
    assert len(p) - 1 == ring_dist(n)[a][b]


def test_route_step_examples():
    g = ring(6)
    rng = random.Random(0)
    first = ring_route_step(RouteRequest(None, 37), 0, g, None, rng)
    assert first.next_hop == 32 and first.swap is None
    assert first.forward == RouteRequest(0, 37)
    mid = ring_route_step(RouteRequest(0, 37), 32, g, None, rng)
    assert mid.next_hop == 36
    assert mid.swap == SwapEvent(32, 0, 36)
    done = ring_route_step(RouteRequest(36, 37), 37, g, None, rng)
    assert done.forward is None and done.next_hop is None


def test_route_consumes_exactly_the_path():
    g = ring(6)
    ledger = EntanglementLedger.full(g)
    trace = ring_route(0, 37, g, ledger, random.Random(0))
    assert trace.path == [0, 32, 36, 37]
    assert [s.node for s in trace.swap_events] == [32, 36]
    assert ledger.missing() == frozenset(required_edges(trace.path))


def test_route_missing_vql_names_edge():
    g = ring(6)
    ledger = EntanglementLedger(g, [(32, 36)])
    with pytest.raises(ResourceError) as info:
        ring_route(0, 37, g, ledger, random.Random(0))
    assert info.value.edge == (32, 36)


@pytest.mark.parametrize("n", [4, 6])
def test_fast_mode_reproduces_ring_path(n):
    g = ring(n)
    size = 1 << n
    for a in range(size):
        for b in range(size):
            expected = ring_path(a, b, g, random.Random(a * size + b))
            trace = ring_route(a, b, g, None, random.Random(a * size + b), fast=True)
            assert trace.path == expected
            assert len(trace.swap_events) == max(0, len(expected) - 2)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_hop_by_hop_route_is_shortest(n):
    # Recomputing at each hop may pick a different shortest path than the
    # sender would have; the length and the swap count must still agree.
    g = ring(n)
    d = ring_dist(n)
    size = 1 << n
    for a in range(0, size, 3):
        for b in range(size):
            trace = ring_route(a, b, g, None, random.Random(b))
            assert is_path(g, trace.path) and trace.hops == d[a][b]
            assert [s.node for s in trace.swap_events] == trace.path[1:-1]
