"""Ring VQL graph on 2**n nodes.

Node ``a`` holds a shortcut to ``a +- 2**k`` for every ``k <= t(a)``, where
``t(a)`` is the 2-adic valuation of ``a`` (and ``t(0) = n``).  Adjacency is
answered arithmetically; no edge list is ever stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import InputError
from .graph import Edge, edge_key

MAX_RING_LEVELS = 30


def _t(a: int, n: int) -> int:
    return n if a == 0 else (a & -a).bit_length() - 1


def _check(a: int, n: int) -> None:
    if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < (1 << n):
        raise InputError(f"vertex {a!r} out of range for ring with n={n}")


def t_value(a: int, n: int) -> int:
    """Exponent of the largest power of two dividing ``a`` (``n`` for zero)."""
    _check(a, n)
    return _t(a, n)


def gcdd_pow2(a: int, b: int, n: int) -> int:
    """Largest power of two dividing both ``a`` and ``b``."""
    _check(a, n)
    _check(b, n)
    return 1 << min(_t(a, n), _t(b, n))


def _adjacent(a: int, b: int, n: int) -> bool:
    size = 1 << n
    gap = abs(a - b) % size
    q = 1 << min(_t(a, n), _t(b, n))
    # either way round the ring
    return gap == q or size - gap == q


def ring_adjacent(a: int, b: int, n: int) -> bool:
    _check(a, n)
    _check(b, n)
    if a == b:
        raise InputError("adjacency is undefined for a vertex and itself")
    return _adjacent(a, b, n)


@dataclass(frozen=True)
class RingTopology:
    n: int
    _nbr_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_RING_LEVELS:
            raise InputError(f"ring level count must be in [1, {MAX_RING_LEVELS}], got {self.n!r}")

    kind = "ring"

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    def neighbors(self, v: int) -> tuple[int, ...]:
        cached = self._nbr_cache.get(v)
        if cached is not None:
            return cached
        _check(v, self.n)
        mask = self.vertex_count - 1
        out = set()
        for k in range(_t(v, self.n) + 1):
            out.add((v + (1 << k)) & mask)
            out.add((v - (1 << k)) & mask)
        out.discard(v)
        result = tuple(sorted(out))
        if self.n <= 16:
            self._nbr_cache[v] = result
        return result

    def contains_edge(self, u: int, v: int) -> bool:
        _check(u, self.n)
        _check(v, self.n)
        return u != v and _adjacent(u, v, self.n)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> Iterator[Edge]:
        """Every edge once, in ascending (u, v) order."""
        for u in range(self.vertex_count):
            for v in self.neighbors(u):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.vertex_count)) // 2

    def gap(self, u: int, v: int) -> int:
        """Shorter way round the ring between two adjacent vertices."""
        size = self.vertex_count
        d = abs(u - v) % size
        return min(d, size - d)

    # -- subdivision hierarchy ---------------------------------------------
    # Seen as iterated subdivision of G_1: vertices 0 and 2**(n-1) form
    # layer 0 and an odd multiple of 2**j sits on layer n-1-j.  An edge
    # spanning 2**j belongs to layer n-1-j, so the unit-step physical edges
    # are the top layer n-1.

    @property
    def layer_count(self) -> int:
        """Number of subdivision levels above the base (``k`` for this ring)."""
        return self.n - 1

    def vertex_layer(self, v: int) -> int:
        _check(v, self.n)
        return max(0, self.n - 1 - _t(v, self.n))

    def vertex_parents(self, v: int) -> tuple[int, int] | None:
        if self.vertex_layer(v) == 0:
            return None
        step = 1 << _t(v, self.n)
        mask = self.vertex_count - 1
        return tuple(sorted(((v - step) & mask, (v + step) & mask)))

    def edge_layer(self, u: int, v: int) -> int:
        if not self.contains_edge(u, v):
            raise InputError(f"{edge_key(u, v)} is not an edge of the ring")
        return self.n - 1 - (self.gap(u, v).bit_length() - 1)

    def is_physical(self, u: int, v: int) -> bool:
        return self.contains_edge(u, v) and self.gap(u, v) == 1

    def physical_edges(self) -> list[Edge]:
        size = self.vertex_count
        return sorted({edge_key(a, (a + 1) % size) for a in range(size)})

    def edge_child(self, u: int, v: int) -> int | None:
        """The vertex whose swap regenerates edge ``{u, v}``; None if physical.

        The base edge ``{0, N/2}`` is the midpoint edge of both ``N/4`` and
        ``3N/4``; only the smaller one is ever used.
        """
        if not self.contains_edge(u, v):
            raise InputError(f"{edge_key(u, v)} is not an edge of the ring")
        g = self.gap(u, v)
        if g == 1:
            return None
        size = self.vertex_count
        a, b = edge_key(u, v)
        if 2 * g == size:
            return min((a + g // 2) % size, (b + g // 2) % size)
        start = a if (a + g) % size == b else b
        return (start + g // 2) % size

    def edges_on_layer(self, layer: int) -> list[Edge]:
        span = 1 << (self.n - 1 - layer)
        size = self.vertex_count
        return sorted({edge_key(a, (a + span) % size) for a in range(0, size, span)
                       if self.contains_edge(a, (a + span) % size)})


def build_ring(n: int) -> RingTopology:
    return RingTopology(n)


def ring_level(ring: RingTopology, u: int, v: int) -> int:
    """Collision-report level of a ring edge: ``n - log2(gcdd)``.

    The longest shortcut ``{0, N/2}`` is level 1 and unit edges are level n.
    """
    if not ring.contains_edge(u, v):
        raise InputError(f"{edge_key(u, v)} is not an edge of the ring")
    q = 1 << min(_t(u, ring.n), _t(v, ring.n))
    return ring.n - (q.bit_length() - 1)
