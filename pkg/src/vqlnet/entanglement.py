"""Single-use VQL bookkeeping and time-stepped entanglement schedules.

Time model: creating a pair over a physical link and swapping at a node
each take one unit, every edge takes part in at most one operation per
step, and every node performs at most one swap per step.  One relaxation
is needed by the level-by-level bootstrap: inside one step an edge may be
consumed by one swap while a swap one layer further up recreates it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError, ResourceError, ScheduleError
from .graph import Edge, Path, edge_key

# Unit-time operation model; decoherence is switched off.
T_CREATE = 1
T_SWAP = 1
T_MEASURE = 1
T_CLASSICAL = 1
T_LIFETIME = math.inf


@dataclass(frozen=True, order=True)
class Swap:
    """Swap at ``node`` joining ``{left, node}`` and ``{node, right}`` into ``{left, right}``."""

    node: int
    left: int
    right: int

    @property
    def inputs(self) -> tuple[Edge, Edge]:
        return edge_key(self.left, self.node), edge_key(self.node, self.right)

    @property
    def output(self) -> Edge:
        return edge_key(self.left, self.right)


@dataclass(frozen=True)
class StepPlan:
    creates: frozenset[Edge] = frozenset()
    swaps: tuple[Swap, ...] = ()

    @classmethod
    def of(cls, creates: Iterable[Edge] = (), swaps: Iterable[Swap] = ()) -> "StepPlan":
        return cls(frozenset(edge_key(*e) for e in creates), tuple(sorted(swaps)))

    def to_record(self) -> dict:
        return {
            "creates": [list(e) for e in sorted(self.creates)],
            "swaps": [[s.node, s.left, s.right] for s in self.swaps],
        }


@dataclass
class Timeline:
    steps: list[StepPlan] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_records(self) -> list[dict]:
        return [dict(step=i + 1, **p.to_record()) for i, p in enumerate(self.steps)]


class EntanglementLedger:
    """Which VQLs of a topology are currently entangled.

    Only the missing (consumed or never created) edges are stored, so a
    fully entangled ledger over a large implicit ring costs nothing.
    """

    def __init__(self, topology, missing: Iterable[Edge] = ()):
        self.topology = topology
        self.time = 0
        self._missing: set[Edge] = set()
        for e in missing:
            self._missing.add(self._edge(*e))

    @classmethod
    def full(cls, topology) -> "EntanglementLedger":
        return cls(topology)

    @classmethod
    def empty(cls, topology) -> "EntanglementLedger":
        return cls(topology, topology.edges())

    def _edge(self, u: int, v: int) -> Edge:
        if u == v or not self.topology.contains_edge(u, v):
            raise InputError(f"{edge_key(u, v)} is not an edge of the topology")
        return edge_key(u, v)

    def copy(self) -> "EntanglementLedger":
        out = EntanglementLedger(self.topology)
        out._missing = set(self._missing)
        out.time = self.time
        return out

    def is_entangled(self, u: int, v: int) -> bool:
        return self._edge(u, v) not in self._missing

    def missing(self) -> frozenset[Edge]:
        return frozenset(self._missing)

    def all_entangled(self) -> bool:
        return not self._missing

    def consume_edge(self, u: int, v: int) -> None:
        e = self._edge(u, v)
        if e in self._missing:
            raise ResourceError(f"VQL {e} is not entangled", edge=e)
        self._missing.add(e)


def check_step(ledger: EntanglementLedger, plan: StepPlan) -> None:
    """Raise :class:`ScheduleError` naming the first constraint ``plan`` breaks."""
    g = ledger.topology
    touched_create: set[Edge] = set()
    for u, v in plan.creates:
        e = ledger._edge(u, v)
        if not g.is_physical(u, v):
            raise ScheduleError(f"create on {e}: not a physical link")
        if e not in ledger._missing:
            raise ScheduleError(f"create on {e}: already entangled")
        touched_create.add(e)

    swap_nodes: set[int] = set()
    consumed: set[Edge] = set()
    produced: set[Edge] = set()
    for s in plan.swaps:
        if s.node in swap_nodes:
            raise ScheduleError(f"node {s.node} swaps more than once in one step")
        swap_nodes.add(s.node)
        if len({s.node, s.left, s.right}) != 3:
            raise ScheduleError(f"swap {s} needs three distinct nodes")
        out = s.output
        if not g.contains_edge(*out):
            raise ScheduleError(f"swap at {s.node} would produce {out}, which is not an edge")
        for e in s.inputs:
            e = ledger._edge(*e)
            if e in ledger._missing:
                raise ScheduleError(f"swap at {s.node} uses {e}, which is not entangled")
            if e in consumed:
                raise ScheduleError(f"{e} is consumed by two swaps in one step")
            if e in touched_create:
                raise ScheduleError(f"{e} is both created and swapped in one step")
            consumed.add(e)
        if out in produced:
            raise ScheduleError(f"{out} is produced by two swaps in one step")
        if out in touched_create:
            raise ScheduleError(f"{out} is both created and produced in one step")
        produced.add(out)

    for e in produced:
        if e not in ledger._missing and e not in consumed:
            raise ScheduleError(f"swap would produce {e}, which is already entangled")


def apply_step(ledger: EntanglementLedger, plan: StepPlan) -> EntanglementLedger:
    """Validate ``plan`` against ``ledger`` and then apply it in place."""
    check_step(ledger, plan)
    missing = ledger._missing
    for s in plan.swaps:
        missing.update(s.inputs)
    for s in plan.swaps:
        missing.discard(s.output)
    missing.difference_update(plan.creates)
    ledger.time += 1
    return ledger


def _regenerate(g, targets: Iterable[Edge]) -> tuple[list[Swap], set[Edge]]:
    """Swaps that rebuild ``targets`` in one step, and the physical links they burn.

    Every non-physical edge is rebuilt by a swap at the vertex placed on it.
    A swap eats two edges one layer up; any that are not physical are
    rebuilt in the same step by their own child, and so on up to the
    physical layer.
    """
    swaps: list[Swap] = []
    burned: set[Edge] = set()
    stack = list(targets)
    while stack:
        a, b = stack.pop()
        c = g.edge_child(a, b)
        if c is None:
            raise InputError(f"{edge_key(a, b)} is physical and cannot be produced by a swap")
        swaps.append(Swap(c, a, b))
        for e in (edge_key(a, c), edge_key(c, b)):
            if g.is_physical(*e):
                burned.add(e)
            else:
                stack.append(e)
    return swaps, burned


def _run(ledger: EntanglementLedger, timeline: Timeline, plan: StepPlan) -> None:
    apply_step(ledger, plan)
    timeline.steps.append(plan)


def bootstrap_schedule(g) -> Timeline:
    """Steps that entangle every edge of ``g`` starting from nothing.

    One create round, then for each layer from the top down a swap round
    that builds that layer while rebuilding everything above it, followed
    by a create round on the physical links the swaps used up.  Every step
    is validated on a scratch ledger before it is returned.
    """
    ledger = EntanglementLedger.empty(g)
    timeline = Timeline()
    _run(ledger, timeline, StepPlan.of(creates=g.physical_edges()))
    for layer in range(g.layer_count - 1, -1, -1):
        swaps, burned = _regenerate(g, g.edges_on_layer(layer))
        _run(ledger, timeline, StepPlan.of(swaps=swaps))
        _run(ledger, timeline, StepPlan.of(creates=burned))
    if not ledger.all_entangled():
        raise ScheduleError(f"bootstrap left {len(ledger.missing())} edges unentangled")
    return timeline


def replenish_schedule(ledger: EntanglementLedger, consumed: Iterable[Edge]) -> Timeline:
    """Steps that restore the edges ``consumed`` on an otherwise full ledger.

    Edges are restored highest layer first; each layer costs one create step
    if it is physical and a swap step plus a create step otherwise.
    ``ledger`` is left untouched; the plan is validated on a copy.
    """
    g = ledger.topology
    todo: set[Edge] = set()
    for e in consumed:
        if len(e) != 2:
            raise InputError(f"{e!r} is not a vertex pair")
        todo.add(ledger._edge(*e))
    if todo != ledger.missing():
        raise InputError("consumed set does not match the ledger's missing edges")
    scratch = ledger.copy()
    timeline = Timeline()
    top = g.layer_count
    while todo:
        level = max(g.edge_layer(*e) for e in todo)
        batch = {e for e in todo if g.edge_layer(*e) == level}
        todo -= batch
        if level == top:
            _run(scratch, timeline, StepPlan.of(creates=batch))
            continue
        swaps, burned = _regenerate(g, sorted(batch))
        _run(scratch, timeline, StepPlan.of(swaps=swaps))
        _run(scratch, timeline, StepPlan.of(creates=burned))
    if not scratch.all_entangled():
        raise ScheduleError(f"replenish left {len(scratch.missing())} edges unentangled")
    return timeline


def replay(ledger: EntanglementLedger, timeline: Timeline) -> EntanglementLedger:
    """Apply every step of ``timeline`` to ``ledger`` in order."""
    for plan in timeline:
        apply_step(ledger, plan)
    return ledger


def consume_path(ledger: EntanglementLedger, path: Path) -> tuple[EntanglementLedger, set[Edge]]:
    """Use up every VQL along ``path``; all-or-nothing."""
    edges = [ledger._edge(a, b) for a, b in zip(path, path[1:])]
    for e in edges:
        if e in ledger._missing:
            raise ResourceError(f"VQL {e} is not entangled", edge=e)
    if len(set(edges)) != len(edges):
        raise InputError("path uses an edge twice")
    ledger._missing.update(edges)
    return ledger, set(edges)
