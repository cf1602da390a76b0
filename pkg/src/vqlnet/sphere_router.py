"""Shortest-path routing on the sphere graph.

Two flavours share the same idea: while the endpoints are more than six
hops apart, the endpoint on the higher layer steps to its preferred
parent; once within six hops a stored breadth-first path finishes the job.

* :func:`global_path` sees the whole graph and computes the path at the
  sender.
* :func:`local_next_hop` runs at each node and sees only that node's own
  data (a :class:`NodeView`) plus the destination's label.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError, InputError, StructuralError
from .graph import Path, check_vertex
from .labels import Label
from .ring_router import RouteTrace, SwapEvent
from .sphere import SphereTopology, common_parent


@dataclass(frozen=True)
class SphereRouteRequest:
    previous_sender: int | None
    destination_label: Label
    carried_path: tuple[int, ...] | None = None


def best_parent(a: int, g: SphereTopology, rng: random.Random) -> int:
    """Parent of ``a`` to route through when the destination is far away."""
    parents = g.vertex_parents(a)
    if parents is None:
        raise DomainError(f"vertex {a} is on layer 0 and has no parents")
    p1, p2 = parents
    l1, l2 = g.vertex_layer(p1), g.vertex_layer(p2)
    if l1 != l2:
        return p1 if l1 < l2 else p2
    if l1 > 0:
        g2 = common_parent(p1, p2, g)
        (g1,) = set(g.vertex_parents(p1)) - {g2}
        (g3,) = set(g.vertex_parents(p2)) - {g2}
        lg1, lg2, lg3 = g.vertex_layer(g1), g.vertex_layer(g2), g.vertex_layer(g3)
        if lg1 < lg2 and lg1 < lg3:
            return p1
        if lg3 < lg2 and lg3 < lg1:
            return p2
    return rng.choice(parents)


def global_path(a: int, b: int, g: SphereTopology, rng: random.Random) -> Path:
    """A shortest ``(a, b)``-path using global knowledge of both endpoints."""
    check_vertex(g, a)
    check_vertex(g, b)
    head = [a]
    tail = [b]
    while True:
        near = g.neighborhood(a).get(b)
        if near is not None:
            tail.reverse()
            return head[:-1] + list(near) + tail[1:]
        if g.vertex_layer(b) > g.vertex_layer(a):
            b = best_parent(b, g, rng)
            tail.append(b)
        else:
            a = best_parent(a, g, rng)
            head.append(a)


class NodeView:
    """Everything a node is allowed to consult when routing locally."""

    __slots__ = ("id", "label", "neighbors", "neighborhood")

    def __init__(self, g: SphereTopology, v: int):
        self.id = v
        self.label: Label = g.label(v)
        self.neighbors: frozenset[int] = frozenset(g.neighbors(v))
        self.neighborhood: dict[int, tuple[int, ...]] = g.neighborhood(v)


def node_view(g: SphereTopology, v: int) -> NodeView:
    check_vertex(g, v)
    return NodeView(g, v)


def local_next_hop(node: NodeView, dest: Label, rng: random.Random) -> Path:
    """Path fragment from ``node`` towards the vertex labelled ``dest``.

    The fragment starts at the node itself.  Its second element is the next
    hop; any further elements are a lookahead that stays on a shortest path.
    """
    a = node.id
    if a == dest.vertex:
        raise InputError("node is already the destination")
    idx = dest.index_of(a)
    if idx is not None:
        options = sorted(set(dest.entries[idx - 1]) & node.neighbors)
        if not options:
            raise StructuralError(
                f"node {a} is in entry {idx} of the label of {dest.vertex} "
                f"but none of entry {idx - 1} is adjacent")
        return [a, rng.choice(options)]
    nbhd = node.neighborhood
    # Score each visible label vertex by the length of the detour through
    # it: hops to reach it plus one hop per entry back up to the destination.
    reachable = [(len(nbhd[x]) - 1 + i, len(nbhd[x]), x)
                 for i, entry in enumerate(dest.entries) for x in entry if x in nbhd]
    if reachable:
        target = min(reachable)[2]
        return list(nbhd[target])
    own = node.label.entries
    if len(own) < 2:
        raise StructuralError(f"base-layer node {a} sees no vertex of the label of {dest.vertex}")
    return [a, rng.choice(own[1])]


def _drive(a: int, b: int, g, ledger, next_fragment, fast: bool) -> RouteTrace:
    path = [a]
    swaps: list[SwapEvent] = []
    prev: int | None = None
    node = a
    pending: list[int] = []
    while node != b:
        if not (fast and pending):
            pending = next_fragment(node)[1:]
        nxt = pending.pop(0)
        if ledger is not None:
            ledger.consume_edge(node, nxt)
        if prev is not None:
            swaps.append(SwapEvent(node, prev, nxt))
        prev, node = node, nxt
        path.append(nxt)
    return RouteTrace(path, swaps)


def global_route(a: int, b: int, g: SphereTopology, ledger, rng: random.Random) -> RouteTrace:
    """Compute the path once at the sender and forward it hop by hop."""
    planned = global_path(a, b, g, rng)
    it = iter(planned[1:])
    return _drive(a, b, g, ledger, lambda node: [node, next(it)], fast=False)


def local_route(a: int, b: int, g: SphereTopology, ledger, rng: random.Random,
                fast: bool = False) -> RouteTrace:
    """Route with purely local decisions at every hop.

    Each node sees only its :class:`NodeView` and the label of ``b``.  With
    ``fast`` a node reuses the lookahead fragment it received instead of
    recomputing at each of the following hops.
    """
    check_vertex(g, a)
    check_vertex(g, b)
    dest = g.label(b)
    return _drive(a, b, g, ledger,
                  lambda node: local_next_hop(node_view(g, node), dest, rng), fast)
