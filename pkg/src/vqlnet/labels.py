"""Hierarchical routing labels for the sphere graph.

A label is the chain of ancestors a far-away router should head for: the
vertex itself, then its preferred parents, their preferred parents, and so
on until a base-layer vertex appears.  Preference means lowest layer first
(Parent Rule) and, among equal-layer parents, having a parent on the lowest
layer reachable from the group (Grandparent Rule).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, InputError
from .graph import check_vertex


@dataclass(frozen=True)
class Label:
    entries: tuple[tuple[int, ...], ...]

    @property
    def vertex(self) -> int:
        return self.entries[0][0]

    def __len__(self) -> int:
        return len(self.entries)

    def members(self) -> set[int]:
        return {v for entry in self.entries for v in entry}

    def index_of(self, v: int) -> int | None:
        for i, entry in enumerate(self.entries):
            if v in entry:
                return i
        return None

    def size(self) -> int:
        """Total number of vertex IDs stored."""
        return sum(len(e) for e in self.entries)

    def render(self) -> str:
        head = self.vertex
        rest = " > ".join("{" + ",".join(map(str, e)) + "}" for e in self.entries[1:])
        return f"{head} | {rest}" if rest else f"{head} |"

    def to_lists(self) -> list[list[int]]:
        return [list(e) for e in self.entries]

    @classmethod
    def from_lists(cls, entries: Iterable[Iterable[int]]) -> "Label":
        out = tuple(tuple(sorted(e)) for e in entries)
        if not out or len(out[0]) != 1:
            raise InputError("a label must start with a single-vertex entry")
        return cls(out)


def _parents_of(vs: Iterable[int], g) -> set[int]:
    out: set[int] = set()
    for v in vs:
        p = g.vertex_parents(v)
        if p is None:
            raise DomainError(f"vertex {v} is on layer 0 and has no parents")
        out.update(p)
    return out


def p_good(group: Iterable[int], g) -> set[int]:
    """Parents of ``group`` that sit on the lowest layer among them."""
    ps = _parents_of(group, g)
    low = min(g.vertex_layer(p) for p in ps)
    return {p for p in ps if g.vertex_layer(p) == low}


def label_filter(group: Iterable[int], g) -> set[int]:
    best = p_good(group, g)
    # every member of best shares one layer, so checking any one suffices
    if g.vertex_layer(next(iter(best))) == 0:
        return best
    target = p_good(best, g)
    return {b for b in best if target.intersection(g.vertex_parents(b))}


def build_label(v: int, g) -> Label:
    check_vertex(g, v)
    entries = [(v,)]
    current = {v}
    while all(g.vertex_layer(x) > 0 for x in current):
        current = label_filter(current, g)
        entries.append(tuple(sorted(current)))
    return Label(tuple(entries))


def check_label(label: Label, g) -> None:
    """Raise :class:`StructuralError` unless ``label`` is well formed for ``g``.

    Used when a label arrives from outside (a parsed file) rather than from
    :func:`build_label`.
    """
    from .errors import StructuralError

    if not label.entries or len(label.entries[0]) != 1:
        raise StructuralError("label must start with a single vertex")
    prev_layer = None
    for i, entry in enumerate(label.entries):
        if not 1 <= len(entry) <= 3:
            raise StructuralError(f"label entry {i} has {len(entry)} members")
        for x in entry:
            check_vertex(g, x)
        layers = {g.vertex_layer(x) for x in entry}
        if len(layers) != 1:
            raise StructuralError(f"label entry {i} mixes layers {sorted(layers)}")
        for a, b in zip(entry, entry[1:]):
            if not g.contains_edge(a, b):
                raise StructuralError(f"label entry {i}: {a} and {b} are not adjacent")
        if len(entry) == 3 and not g.contains_edge(entry[0], entry[2]):
            raise StructuralError(f"label entry {i}: {entry[0]} and {entry[2]} are not adjacent")
        layer = layers.pop()
        if prev_layer is not None and layer >= prev_layer:
            raise StructuralError(f"label entry {i} does not descend in layer")
        prev_layer = layer
    if prev_layer != 0:
        raise StructuralError("label does not reach layer 0")
    if build_label(label.vertex, g) != label:
        raise StructuralError(f"label for {label.vertex} differs from the one the graph implies")
