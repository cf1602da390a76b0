"""Collision-under-load experiment.

Each sample draws ``2 * pairs`` distinct nodes, pairs them up in draw
order, routes every pair on its own seeded stream and records whether any
VQL is demanded by two of the paths.  When there is a collision, the
lowest level among the shared edges is kept, since long-range links are
the costliest to rebuild.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
from collections import Counter
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Edge, Path, edge_key
from .ring import RingTopology, ring_level
from .ring_router import ring_path
from .sphere import SphereTopology
from .sphere_router import global_path, local_route

MODES = ("ring", "sphere-global", "sphere-local")
CSV_COLUMNS = ("sample_index", "pairs", "collided", "lowest_layer")


def derive_seed(master: int, sample: int, pair: int) -> int:
    """64-bit child seed from (master, sample, pair) via BLAKE2b."""
    h = hashlib.blake2b(f"{master}:{sample}:{pair}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


def default_mode(g) -> str:
    return "ring" if isinstance(g, RingTopology) else "sphere-local"


@dataclass(frozen=True)
class SimConfig:
    topology: object
    pairs: int
    samples: int
    seed: int
    mode: str = ""

    def __post_init__(self):
        if not self.mode:
            object.__setattr__(self, "mode", default_mode(self.topology))
        if self.mode not in MODES:
            raise InputError(f"unknown routing mode {self.mode!r}; choose from {MODES}")
        is_ring = isinstance(self.topology, RingTopology)
        if is_ring != (self.mode == "ring"):
            raise InputError(f"mode {self.mode!r} does not fit a {self.topology.kind} topology")
        if self.pairs < 1 or self.samples < 1:
            raise InputError("pairs and samples must both be positive")
        if 2 * self.pairs > self.topology.vertex_count:
            raise InputError(f"{2 * self.pairs} distinct nodes requested from "
                             f"{self.topology.vertex_count}")


@dataclass(frozen=True)
class SampleRecord:
    sample_index: int
    pairs: int
    collided: bool
    lowest_layer: int | None


@dataclass
class SimReport:
    records: list[SampleRecord] = field(default_factory=list)

    @property
    def samples(self) -> int:
        return len(self.records)

    @property
    def collisions(self) -> int:
        return sum(r.collided for r in self.records)

    @property
    def collision_fraction(self) -> float:
        return self.collisions / self.samples if self.records else 0.0

    def layer_histogram(self) -> dict[int, int]:
        c = Counter(r.lowest_layer for r in self.records if r.collided)
        return dict(sorted(c.items()))

    def layer_share(self, layers) -> float:
        """Fraction of collided samples whose lowest collision is in ``layers``."""
        if not self.collisions:
            return 0.0
        hist = self.layer_histogram()
        return sum(hist.get(x, 0) for x in layers) / self.collisions

    def summary(self) -> dict:
        return {
            "samples": self.samples,
            "collisions": self.collisions,
            "collision_fraction": self.collision_fraction,
            "lowest_layer_histogram": {str(k): v for k, v in self.layer_histogram().items()},
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            w.writerow([r.sample_index, r.pairs, int(r.collided),
                        "" if r.lowest_layer is None else r.lowest_layer])
        return buf.getvalue()

    def summary_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True, indent=2) + "\n"


def draw_request_pairs(g, pairs: int, rng: random.Random) -> list[tuple[int, int]]:
    n = g.vertex_count
    if pairs < 0 or 2 * pairs > n:
        raise InputError(f"cannot draw {pairs} disjoint pairs from {n} nodes")
    nodes = rng.sample(range(n), 2 * pairs)
    return list(zip(nodes[0::2], nodes[1::2]))


def edge_level(g, e: Edge) -> int:
    """Layer used for collision reports: creation layer on the sphere,
    ``n - log2(gcdd)`` on the ring."""
    u, v = e
    if isinstance(g, RingTopology):
        return ring_level(g, u, v)
    return g.edge_layer(u, v)


def detect_collisions(paths: list[Path], g) -> tuple[bool, int | None]:
    seen: set[Edge] = set()
    shared: set[Edge] = set()
    for p in paths:
        for e in {edge_key(a, b) for a, b in zip(p, p[1:])}:
            if e in seen:
                shared.add(e)
            seen.add(e)
    if not shared:
        return False, None
    return True, min(edge_level(g, e) for e in shared)


def route_pair(g, a: int, b: int, mode: str, rng: random.Random) -> Path:
    if mode == "ring":
        return ring_path(a, b, g, rng)
    if mode == "sphere-global":
        return global_path(a, b, g, rng)
    return local_route(a, b, g, None, rng).path


def run_load_sim(cfg: SimConfig) -> SimReport:
    g = cfg.topology
    report = SimReport()
    for s in range(cfg.samples):
        draw_rng = random.Random(derive_seed(cfg.seed, s, -1))
        paths = []
        for j, (a, b) in enumerate(draw_request_pairs(g, cfg.pairs, draw_rng)):
            paths.append(route_pair(g, a, b, cfg.mode, random.Random(derive_seed(cfg.seed, s, j))))
        collided, low = detect_collisions(paths, g)
        report.records.append(SampleRecord(s, cfg.pairs, collided, low))
    return report
