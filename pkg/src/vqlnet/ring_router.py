"""Shortest-path routing on the ring VQL graph.

``ring_path`` grows a path from whichever endpoint has the smaller 2-adic
valuation, always stepping to the neighbour ``a +- 2**t(a)`` that climbs
higher in the divisibility hierarchy, until the two ends are at most two
hops apart.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Path, edge_key
from .ring import RingTopology, _adjacent, _check, _t


@dataclass(frozen=True)
class RouteRequest:
    previous_sender: int | None
    destination: int


@dataclass(frozen=True)
class SwapEvent:
    node: int
    left: int
    right: int


@dataclass
class RouteTrace:
    path: Path
    swap_events: list[SwapEvent] = field(default_factory=list)

    @property
    def hops(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class HopResult:
    """Outcome of one routing step at a node.

    ``forward`` is None when the destination has been reached.
    """

    next_hop: int | None
    forward: RouteRequest | None
    swap: SwapEvent | None


def _plus_minus(a: int, n: int) -> tuple[int, int]:
    mask = (1 << n) - 1
    step = 1 << _t(a, n)
    return (a + step) & mask, (a - step) & mask


def best_move(a: int, ring: RingTopology, rng: random.Random) -> int:
    """Neighbour ``a +- 2**t(a)`` with the larger valuation; ties go to ``rng``."""
    n = ring.n
    _check(a, n)
    hi, lo = _plus_minus(a, n)
    if hi == lo:
        return hi
    th, tl = _t(hi, n), _t(lo, n)
    if th > tl:
        return hi
    if th < tl:
        return lo
    return rng.choice((hi, lo))


def _path2(a: int, b: int, n: int) -> list[int] | None:
    if _adjacent(a, b, n):
        return [a, b]
    if _t(a, n) <= _t(b, n):
        g, other = a, b
    else:
        g, other = b, a
    for mid in _plus_minus(g, n):
        if mid != other and _adjacent(mid, other, n):
            return [a, mid, b]
    return None


def path2(a: int, b: int, ring: RingTopology) -> Path | None:
    """A shortest path if ``d(a, b) <= 2``, else None."""
    _check(a, ring.n)
    _check(b, ring.n)
    if a == b:
        raise InputError("path2 needs two distinct vertices")
    return _path2(a, b, ring.n)


def ring_path(a: int, b: int, ring: RingTopology, rng: random.Random) -> Path:
    """A shortest ``(a, b)``-path in the ring graph."""
    n = ring.n
    _check(a, n)
    _check(b, n)
    if a == b:
        return [a]
    head = [a]
    tail = [b]
    while True:
        close = _path2(a, b, n)
        if close is not None:
            tail.reverse()
            return head[:-1] + close + tail[1:]
        if _t(a, n) <= _t(b, n):
            a = best_move(a, ring, rng)
            head.append(a)
        else:
            b = best_move(b, ring, rng)
            tail.append(b)


def ring_route_step(request: RouteRequest, node: int, ring: RingTopology, ledger,
                    rng: random.Random, planned: Path | None = None) -> HopResult:
    """One hop of the distributed ring routing procedure, run at ``node``.

    The node consumes the VQL towards the next hop from ``ledger`` and, unless
    it is the original sender, swaps its incoming and outgoing links.  Passing
    ``planned`` (the remaining path, starting at ``node``) skips recomputing
    the path.
    """
    _check(node, ring.n)
    _check(request.destination, ring.n)
    if node == request.destination:
        return HopResult(None, None, None)
    if planned is None:
        planned = ring_path(node, request.destination, ring, rng)
    elif planned[0] != node or planned[-1] != request.destination:
        raise InputError("planned path does not run from this node to the destination")
    nxt = planned[1]
    if ledger is not None:
        ledger.consume_edge(node, nxt)
    swap = None
    if request.previous_sender is not None:
        swap = SwapEvent(node, request.previous_sender, nxt)
    return HopResult(nxt, RouteRequest(node, request.destination), swap)


def ring_route(a: int, b: int, ring: RingTopology, ledger, rng: random.Random,
               fast: bool = False) -> RouteTrace:
    """Drive :func:`ring_route_step` from ``a`` until ``b`` is reached.

    With ``fast`` the path computed at the sender is reused by every later
    hop instead of being recomputed at each node.
    """
    request = RouteRequest(None, b)
    node = a
    path = [a]
    swaps: list[SwapEvent] = []
    remaining = ring_path(a, b, ring, rng) if fast else None
    while True:
        step = ring_route_step(request, node, ring, ledger, rng,
                               planned=remaining)
        if step.forward is None:
            break
        if step.swap is not None:
            swaps.append(step.swap)
        path.append(step.next_hop)
        node = step.next_hop
        request = step.forward
        if remaining is not None:
            remaining = remaining[1:]
    return RouteTrace(path, swaps)


def required_edges(path: Path) -> list[tuple[int, int]]:
    return [edge_key(x, y) for x, y in zip(path, path[1:])]
