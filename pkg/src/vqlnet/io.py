"""Canonical JSON documents for graphs and timelines.

Output uses sorted keys, fixed indentation and sorted records, so the same
object always serializes to the same bytes.
"""

from __future__ import annotations

import json

from .errors import InputError, StructuralError
from .graph import edge_key
from .labels import Label, check_label
from .ring import RingTopology, build_ring
from .sphere import (MAX_SUBDIVISIONS, SphereTopology, layer_edge_count_formula,
                     vertex_count_formula)
from .entanglement import StepPlan, Swap, Timeline

GRAPH_FORMAT = "vqlnet-graph/1"
TIMELINE_FORMAT = "vqlnet-timeline/1"


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def graph_document(g) -> dict:
    if isinstance(g, RingTopology):
        return {"format": GRAPH_FORMAT, "kind": "ring", "n": g.n}
    vertices = []
    for v in range(g.vertex_count):
        sv = g.vertex(v)
        vertices.append({
            "id": v,
            "layer": sv.layer,
            "parents": list(sv.parents) if sv.parents else None,
            "coords": list(sv.coords) if sv.coords else None,
            "label": g.label(v).to_lists(),
        })
    return {
        "format": GRAPH_FORMAT,
        "kind": "sphere",
        "k": g.k,
        "vertices": vertices,
        "edges": [list(t) for t in g.edge_items()],
    }


def serialize_graph(g) -> str:
    return dumps(graph_document(g))


def _need(doc: dict, key: str, kind=None):
    if key not in doc:
        raise InputError(f"graph file is missing {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise InputError(f"graph file field {key!r} has the wrong type")
    return val


def _sphere_from_document(doc: dict) -> SphereTopology:
    k = _need(doc, "k", int)
    if not 0 <= k <= MAX_SUBDIVISIONS:
        raise InputError(f"subdivision count {k} out of range")
    records = _need(doc, "vertices", list)
    n = len(records)
    if n != vertex_count_formula(k):
        raise StructuralError(f"{n} vertex records, expected {vertex_count_formula(k)} for k={k}")
    layers: list[int] = []
    parents: list[tuple[int, int] | None] = []
    coords: list | None = []
    labels: list[Label] = []
    for i, rec in enumerate(records):
        if not isinstance(rec, dict) or rec.get("id") != i:
            raise InputError(f"vertex record {i} is malformed or out of order")
        layer = rec.get("layer")
        if not isinstance(layer, int) or not 0 <= layer <= k:
            raise InputError(f"vertex {i} has invalid layer {layer!r}")
        layers.append(layer)
        p = rec.get("parents")
        if p is None:
            parents.append(None)
        else:
            if len(p) != 2 or not all(isinstance(x, int) and 0 <= x < n for x in p):
                raise InputError(f"vertex {i} has invalid parents {p!r}")
            parents.append(edge_key(*p))
        c = rec.get("coords")
        if c is None or coords is None:
            coords = None
        else:
            coords.append(tuple(float(x) for x in c))
        try:
            labels.append(Label.from_lists(rec.get("label") or []))
        except (TypeError, ValueError) as exc:
            raise InputError(f"vertex {i} has an invalid label") from exc

    adj: list[set[int]] = [set() for _ in range(n)]
    edge_layers = {}
    for rec in _need(doc, "edges", list):
        if not (isinstance(rec, list) and len(rec) == 3 and all(isinstance(x, int) for x in rec)):
            raise InputError(f"malformed edge record {rec!r}")
        u, v, lay = rec
        if not (0 <= u < n and 0 <= v < n and u != v and 0 <= lay <= k):
            raise InputError(f"edge record {rec!r} out of range")
        e = edge_key(u, v)
        if e in edge_layers:
            raise StructuralError(f"duplicate edge {e}")
        edge_layers[e] = lay
        adj[u].add(v)
        adj[v].add(u)
    for i in range(k + 1):
        got = sum(1 for lay in edge_layers.values() if lay == i)
        if got != layer_edge_count_formula(i):
            raise StructuralError(f"layer {i} has {got} edges, expected {layer_edge_count_formula(i)}")

    children = {}
    for v, p in enumerate(parents):
        if (p is None) != (layers[v] == 0):
            raise StructuralError(f"vertex {v}: parents do not match layer {layers[v]}")
        if p is None:
            continue
        if p not in edge_layers or edge_layers[p] != layers[v] - 1:
            raise StructuralError(f"vertex {v}: parents {p} are not an edge of layer {layers[v] - 1}")
        if max(layers[x] for x in p) != layers[v] - 1:
            raise StructuralError(f"vertex {v}: layer is not one above its parents")
        if p in children:
            raise StructuralError(f"edge {p} is subdivided twice")
        children[p] = v
    if len(children) != sum(1 for lay in edge_layers.values() if lay < k):
        raise StructuralError("some edge below the top layer has no midpoint vertex")

    g = SphereTopology(k, layers, parents, [tuple(sorted(a)) for a in adj],
                       edge_layers, children, coords)
    for lab in labels:
        check_label(lab, g)
    for v, lab in enumerate(labels):
        if lab.vertex != v:
            raise StructuralError(f"label of vertex {v} names vertex {lab.vertex}")
        g._labels[v] = lab
    return g


def parse_graph(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"graph file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != GRAPH_FORMAT:
        raise InputError(f"not a {GRAPH_FORMAT} document")
    kind = doc.get("kind")
    if kind == "ring":
        return build_ring(_need(doc, "n", int))
    if kind == "sphere":
        return _sphere_from_document(doc)
    raise InputError(f"unknown graph kind {kind!r}")


def graph_header(g) -> dict:
    return {"kind": g.kind, "n": g.n} if isinstance(g, RingTopology) else {"kind": g.kind, "k": g.k}


def serialize_timeline(timeline: Timeline, g, note: str = "") -> str:
    doc = {
        "format": TIMELINE_FORMAT,
        "graph": graph_header(g),
        "length": len(timeline),
        "steps": timeline.to_records(),
    }
    if note:
        doc["note"] = note
    return dumps(doc)


def parse_timeline(text: str) -> Timeline:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"timeline file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != TIMELINE_FORMAT:
        raise InputError(f"not a {TIMELINE_FORMAT} document")
    out = Timeline()
    for rec in doc.get("steps", []):
        try:
            out.steps.append(StepPlan.of(
                creates=[tuple(e) for e in rec["creates"]],
                swaps=[Swap(*s) for s in rec["swaps"]]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed timeline step {rec!r}") from exc
    return out
