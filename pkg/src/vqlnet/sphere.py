"""Sphere VQL graph: an icosahedron refined by repeated edge subdivision.

Each subdivision puts a new vertex on every edge created by the previous
one.  The new vertex is linked to the two endpoints of that edge (its
parents) and to the four new vertices sitting on the neighbouring edges of
the two triangles that share it.  All older edges are kept as long-range
links, so the vertex IDs of layers ``0..h`` always form the graph ``G_h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import DomainError, InputError, StructuralError
from .graph import Edge, check_vertex, edge_key, kth_neighborhood

MAX_SUBDIVISIONS = 6
NEIGHBORHOOD_RADIUS = 6

Coords = tuple[float, float, float]


@dataclass(frozen=True)
class SphereVertex:
    id: int
    layer: int
    parents: tuple[int, int] | None
    coords: Coords | None = None


def vertex_count_formula(k: int) -> int:
    return 10 * 4 ** k + 2


def layer_edge_count_formula(i: int) -> int:
    return 30 * 4 ** i


def edge_count_formula(k: int) -> int:
    return 10 * 4 ** (k + 1) - 10


def degree_formula(k: int, layer: int) -> int:
    return 5 * (k + 1) if layer == 0 else 6 * (k - layer) + 6


class SphereTopology:
    """Immutable layered sphere graph after ``k`` subdivisions.

    Holds per-vertex layer and parents, per-edge creation layer, and the map
    from each non-physical edge to the vertex that was placed on it.  Labels
    and 6-hop neighbourhoods are derived on first use and cached.
    """

    kind = "sphere"

    def __init__(self, k: int, layers: list[int], parents: list[tuple[int, int] | None],
                 adjacency: list[tuple[int, ...]], edge_layers: dict[Edge, int],
                 children: dict[Edge, int], coords: list[Coords] | None = None):
        self.k = k
        self._layers = layers
        self._parents = parents
        self._adj = adjacency
        self._adj_sets = [frozenset(a) for a in adjacency]
        self._edge_layers = edge_layers
        self._children = children
        self._coords = coords
        self._labels: dict = {}
        self._nbhd: dict[int, dict[int, tuple[int, ...]]] = {}

    # -- adjacency view ----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._layers)

    def neighbors(self, v: int) -> tuple[int, ...]:
        check_vertex(self, v)
        return self._adj[v]

    def contains_edge(self, u: int, v: int) -> bool:
        check_vertex(self, u)
        check_vertex(self, v)
        return v in self._adj_sets[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> Iterator[Edge]:
        return iter(sorted(self._edge_layers))

    def edge_count(self) -> int:
        return len(self._edge_layers)

    # -- hierarchy ---------------------------------------------------------

    @property
    def layer_count(self) -> int:
        return self.k

    def vertex_layer(self, v: int) -> int:
        check_vertex(self, v)
        return self._layers[v]

    def vertex_parents(self, v: int) -> tuple[int, int] | None:
        check_vertex(self, v)
        return self._parents[v]

    def vertex(self, v: int) -> SphereVertex:
        check_vertex(self, v)
        c = self._coords[v] if self._coords is not None else None
        return SphereVertex(v, self._layers[v], self._parents[v], c)

    def vertices_on_layer(self, layer: int) -> list[int]:
        return [v for v, lv in enumerate(self._layers) if lv == layer]

    def coords(self, v: int) -> Coords | None:
        check_vertex(self, v)
        return None if self._coords is None else self._coords[v]

    def edge_layer(self, u: int, v: int) -> int:
        try:
            return self._edge_layers[edge_key(u, v)]
        except KeyError:
            raise InputError(f"{edge_key(u, v)} is not an edge of the sphere graph") from None

    def edge_items(self) -> list[tuple[int, int, int]]:
        return [(u, v, lay) for (u, v), lay in sorted(self._edge_layers.items())]

    def edges_on_layer(self, layer: int) -> list[Edge]:
        return sorted(e for e, lay in self._edge_layers.items() if lay == layer)

    def is_physical(self, u: int, v: int) -> bool:
        return self._edge_layers.get(edge_key(u, v)) == self.k

    def physical_edges(self) -> list[Edge]:
        return self.edges_on_layer(self.k)

    def edge_child(self, u: int, v: int) -> int | None:
        """Vertex placed on edge ``{u, v}`` by the next subdivision, if any."""
        self.edge_layer(u, v)
        return self._children.get(edge_key(u, v))

    # -- cached routing data -------------------------------------------------

    def label(self, v: int):
        """Routing label of ``v`` (computed once, then cached)."""
        check_vertex(self, v)
        lab = self._labels.get(v)
        if lab is None:
            from .labels import build_label
            lab = self._labels[v] = build_label(v, self)
        return lab

    def precompute_labels(self) -> None:
        for v in range(self.vertex_count):
            self.label(v)

    def neighborhood(self, v: int) -> dict[int, tuple[int, ...]]:
        """Vertices within six hops of ``v``, each with a stored shortest path."""
        table = self._nbhd.get(v)
        if table is None:
            table = self._nbhd[v] = kth_neighborhood(self, v, NEIGHBORHOOD_RADIUS)
        return table

    def __repr__(self) -> str:
        return f"SphereTopology(k={self.k}, vertices={self.vertex_count})"


_PHI = (1 + math.sqrt(5)) / 2


def _unit(x: float, y: float, z: float) -> Coords:
    r = math.sqrt(x * x + y * y + z * z)
    return (x / r, y / r, z / r)


def build_icosahedron() -> SphereTopology:
    raw = []
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            raw.append((0.0, s1 * 1.0, s2 * _PHI))
            raw.append((s1 * 1.0, s2 * _PHI, 0.0))
            raw.append((s2 * _PHI, 0.0, s1 * 1.0))
    raw.sort()
    # neighbouring vertices sit exactly 2 apart; every other pair is farther
    edges = [(u, v) for u, v in combinations(range(12), 2)
             if abs(math.dist(raw[u], raw[v]) - 2.0) < 1e-9]
    if len(edges) != 30:
        raise StructuralError(f"icosahedron construction produced {len(edges)} edges")
    adj: list[set[int]] = [set() for _ in range(12)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return SphereTopology(
        k=0,
        layers=[0] * 12,
        parents=[None] * 12,
        adjacency=[tuple(sorted(a)) for a in adj],
        edge_layers={e: 0 for e in edges},
        children={},
        coords=[_unit(*p) for p in raw],
    )


def subdivide_once(g: SphereTopology) -> SphereTopology:
    """Apply one subdivision step to ``g`` and return the refined graph."""
    i = g.k
    layers = list(g._layers)
    parents = list(g._parents)
    adj = [set(a) for a in g._adj]
    edge_layers = dict(g._edge_layers)
    children = dict(g._children)
    coords = list(g._coords) if g._coords is not None else None

    top = g.edges_on_layer(i)
    mid: dict[Edge, int] = {}
    for e in top:
        alpha = len(layers)
        mid[e] = alpha
        children[e] = alpha
        layers.append(i + 1)
        parents.append(e)
        adj.append(set())
        if coords is not None:
            a, b = coords[e[0]], coords[e[1]]
            coords.append(_unit(a[0] + b[0], a[1] + b[1], a[2] + b[2]))

    old_layers = g._layers
    old_adj = g._adj_sets
    new_edges: set[Edge] = set()
    for e, alpha in mid.items():
        b1, b2 = e
        new_edges.add(edge_key(alpha, b1))
        new_edges.add(edge_key(alpha, b2))
        same = old_layers[b1] == old_layers[b2]
        wings = sorted(b for b in old_adj[b1] & old_adj[b2]
                       if same or old_layers[b] == i)
        if len(wings) != 2:
            raise StructuralError(
                f"subdividing edge {e} at layer {i}: expected 2 triangle apexes, "
                f"found {wings}")
        for x in (b1, b2):
            for w in wings:
                sib = mid.get(edge_key(x, w))
                if sib is None:
                    raise StructuralError(
                        f"subdividing edge {e} at layer {i}: neighbouring edge "
                        f"{edge_key(x, w)} is not on layer {i}")
                new_edges.add(edge_key(alpha, sib))

    for u, v in new_edges:
        adj[u].add(v)
        adj[v].add(u)
        edge_layers[(u, v)] = i + 1

    return SphereTopology(
        k=i + 1,
        layers=layers,
        parents=parents,
        adjacency=[tuple(sorted(a)) for a in adj],
        edge_layers=edge_layers,
        children=children,
        coords=coords,
    )


def build_sphere(k: int) -> SphereTopology:
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= MAX_SUBDIVISIONS:
        raise InputError(f"subdivision count must be in [0, {MAX_SUBDIVISIONS}], got {k!r}")
    g = build_icosahedron()
    for _ in range(k):
        g = subdivide_once(g)
    return g


def common_parent(a: int, b: int, g: SphereTopology) -> int:
    """The shared parent of two adjacent vertices.

    Defined when ``a == b``, when both sit on the same positive layer, or
    when one of them is a parent of the other.
    """
    check_vertex(g, a)
    check_vertex(g, b)
    if a == b:
        return a
    if not g.contains_edge(a, b):
        raise DomainError(f"{a} and {b} are not adjacent")
    la, lb = g.vertex_layer(a), g.vertex_layer(b)
    pa, pb = g.vertex_parents(a), g.vertex_parents(b)
    if la == lb:
        if la == 0:
            raise DomainError(f"{a} and {b} are both on layer 0 and have no parents")
        shared = set(pa) & set(pb)
        if len(shared) != 1:
            raise StructuralError(f"{a} and {b} share parents {sorted(shared)}, expected one")
        return shared.pop()
    if pa is not None and b in pa:
        return b
    if pb is not None and a in pb:
        return a
    raise DomainError(f"{a} and {b} are on different layers but neither is a parent of the other")
