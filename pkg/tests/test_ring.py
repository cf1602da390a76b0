import pytest
from hypothesis import given, strategies as st

from helpers import ring, ring_dist
from vqlnet.errors import InputError
from vqlnet.graph import diameter
from vqlnet.ring import build_ring, gcdd_pow2, ring_adjacent, ring_level, t_value


@pytest.mark.parametrize("a,n,expected", [(0, 6, 6), (12, 6, 2), (37, 6, 0), (32, 6, 5)])
def test_t_value(a, n, expected):
    assert t_value(a, n) == expected


@pytest.mark.parametrize("a,b,n,expected", [(8, 12, 6, 4), (0, 0, 6, 64), (1, 2, 4, 1)])
def test_gcdd(a, b, n, expected):
    assert gcdd_pow2(a, b, n) == expected


def test_out_of_range():
    with pytest.raises(InputError):
        t_value(64, 6)
    with pytest.raises(InputError):
        gcdd_pow2(-1, 2, 4)
    with pytest.raises(InputError):
        build_ring(0)
    with pytest.raises(InputError):
        build_ring(31)


@pytest.mark.parametrize("a,b,expected", [(0, 8, True), (1, 2, True), (1, 3, False), (15, 0, True)])
def test_adjacency(a, b, expected):
    assert ring_adjacent(a, b, 4) is expected
    assert ring_adjacent(b, a, 4) is expected


def test_self_adjacency_rejected():
    with pytest.raises(InputError):
        ring_adjacent(3, 3, 4)


def test_small_rings():
    assert list(ring(1).edges()) == [(0, 1)]
    assert sorted(ring(2).edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]


def test_degree_of_zero():
    assert ring(4).neighbors(0) == (1, 2, 4, 8, 12, 14, 15)


@pytest.mark.parametrize("n", range(1, 11))
def test_neighbors_agree_with_adjacency_rule(n):
    g = ring(n)
    size = 1 << n
    for a in range(size):
        brute = tuple(b for b in range(size) if b != a and ring_adjacent(a, b, n))
        assert g.neighbors(a) == brute
        assert g.degree(a) <= 2 * n
        assert g.contains_edge(a, (a + 1) % size) or size == 1


@given(st.integers(1, 30), st.data())
def test_neighbors_formula_large_n(n, data):
    a = data.draw(st.integers(0, (1 << n) - 1))
    g = build_ring(n)
    for b in g.neighbors(a):
        assert ring_adjacent(a, b, n)
    assert len(g.neighbors(a)) <= 2 * n


@pytest.mark.parametrize("n", range(2, 11))
def test_even_vertices_form_previous_ring(n):
    g, h = ring(n), ring(n - 1)
    half = 1 << (n - 1)
    for a in range(half):
        for b in range(a + 1, half):
            assert g.contains_edge(2 * a, 2 * b) == h.contains_edge(a, b)


@pytest.mark.parametrize("n", range(1, 10))
def test_distance_scaling(n):
    d, e = ring_dist(n), ring_dist(n + 1)
    size = 1 << n
    for a in range(size):
        for b in range(size):
            assert d[a][b] == e[2 * a][2 * b]


@pytest.mark.parametrize("n", range(1, 11))
def test_diameter_bound(n):
    assert diameter(ring(n)) <= 2 * n - 1


def test_hierarchy_layers():
    g = ring(4)
    assert g.layer_count == 3
    assert [g.vertex_layer(v) for v in (0, 8, 4, 12, 2, 1)] == [0, 0, 1, 1, 2, 3]
    assert g.vertex_parents(12) == (0, 8)
    assert g.vertex_parents(5) == (4, 6)
    assert g.edge_layer(0, 8) == 0
    assert g.edge_layer(1, 2) == 3
    assert g.edge_child(0, 8) == 4
    assert g.edge_child(4, 8) == 6
    assert g.edge_child(12, 0) == 14
    assert g.edge_child(3, 4) is None
    assert g.edges_on_layer(0) == [(0, 8)]
    assert len(g.physical_edges()) == 16


@pytest.mark.parametrize("n", range(1, 9))
def test_every_edge_on_exactly_one_layer(n):
    g = ring(n)
    layered = [e for i in range(g.layer_count + 1) for e in g.edges_on_layer(i)]
    assert sorted(layered) == sorted(g.edges())


def test_ring_level():
    g = ring(4)
    assert ring_level(g, 0, 8) == 1
    assert ring_level(g, 1, 2) == 4
    with pytest.raises(InputError):
        ring_level(g, 1, 3)
