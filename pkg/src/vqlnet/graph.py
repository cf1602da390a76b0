"""Graph abstraction and breadth-first-search oracles.

Every topology in the package exposes the small :class:`AdjacencyView`
surface; everything here only reads through it.  Neighbour lists are
expected in ascending ID order, which makes BFS tie-breaking deterministic.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterator, Protocol, Sequence

from .errors import InputError, StructuralError

Edge = tuple[int, int]
Path = list[int]

DIAMETER_BUDGET = 10_000


class AdjacencyView(Protocol):
    @property
    def vertex_count(self) -> int: ...

    def neighbors(self, v: int) -> Sequence[int]: ...

    def contains_edge(self, u: int, v: int) -> bool: ...


def edge_key(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


def path_edges(path: Sequence[int]) -> Iterator[Edge]:
    for a, b in zip(path, path[1:]):
        yield edge_key(a, b)


def check_vertex(graph: AdjacencyView, v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < graph.vertex_count:
        raise InputError(f"vertex {v!r} out of range [0, {graph.vertex_count})")


def is_path(graph: AdjacencyView, path: Sequence[int]) -> bool:
    """True if ``path`` is a simple path in ``graph``."""
    if not path or len(set(path)) != len(path):
        return False
    return all(graph.contains_edge(a, b) for a, b in zip(path, path[1:]))


def _bfs_parents(graph: AdjacencyView, src: int, radius: int | None = None,
                 stop: int | None = None) -> dict[int, int]:
    parent = {src: src}
    depth = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == stop:
            break
        if radius is not None and depth[u] >= radius:
            continue
        du = depth[u] + 1
        for w in graph.neighbors(u):
            if w not in parent:
                parent[w] = u
                depth[w] = du
                queue.append(w)
    return parent


def _walk_back(parent: dict[int, int], dst: int) -> Path:
    out = [dst]
    while parent[out[-1]] != out[-1]:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def bfs_shortest_path(graph: AdjacencyView, src: int, dst: int) -> Path | None:
    """Shortest path from ``src`` to ``dst``, or ``None`` if disconnected.

    Vertices are expanded in ascending-ID order, so the result is the same
    on every run.
    """
    check_vertex(graph, src)
    check_vertex(graph, dst)
    parent = _bfs_parents(graph, src, stop=dst)
    if dst not in parent:
        return None
    return _walk_back(parent, dst)


def bfs_distances(graph: AdjacencyView, src: int) -> list[int]:
    """Hop distance from ``src`` to every vertex; -1 marks unreachable."""
    check_vertex(graph, src)
    dist = [-1] * graph.vertex_count
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in graph.neighbors(u):
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def all_pairs_distances(graph: AdjacencyView) -> list[list[int]]:
    return [bfs_distances(graph, s) for s in range(graph.vertex_count)]


def diameter(graph: AdjacencyView) -> int:
    """Exact diameter by BFS from every vertex.

    Refuses graphs above :data:`DIAMETER_BUDGET` vertices; use
    :func:`estimate_diameter` for those.
    """
    n = graph.vertex_count
    if n > DIAMETER_BUDGET:
        raise InputError(
            f"exact diameter refused: {n} vertices exceeds budget of {DIAMETER_BUDGET}; "
            "use estimate_diameter for a sampled lower bound")
    best = 0
    for s in range(n):
        dist = bfs_distances(graph, s)
        if min(dist) < 0:
            raise StructuralError("graph is disconnected")
        best = max(best, max(dist))
    return best


def estimate_diameter(graph: AdjacencyView, samples: int, rng: random.Random) -> int:
    """Largest eccentricity over ``samples`` random sources.

    This is a lower bound on the true diameter, not the diameter itself.
    """
    n = graph.vertex_count
    best = 0
    for s in rng.sample(range(n), min(samples, n)):
        dist = bfs_distances(graph, s)
        if min(dist) < 0:
            raise StructuralError("graph is disconnected")
        best = max(best, max(dist))
    return best


def kth_neighborhood(graph: AdjacencyView, center: int, radius: int) -> dict[int, tuple[int, ...]]:
    """All vertices within ``radius`` hops of ``center``.

    Each vertex maps to one shortest path from ``center`` (inclusive of both
    ends), chosen by the same deterministic BFS as :func:`bfs_shortest_path`.
    """
    check_vertex(graph, center)
    if radius < 0:
        raise InputError(f"radius must be non-negative, got {radius}")
    parent = _bfs_parents(graph, center, radius=radius)
    paths: dict[int, tuple[int, ...]] = {center: (center,)}
    # BFS discovery order guarantees a vertex's parent is resolved first.
    for v, p in parent.items():
        if v != center:
            paths[v] = paths[p] + (v,)
    return paths
