"""Command-line front end: ``vqlnet <command> ...``.

Exit status is 0 on success, 1 for usage errors and 2 when the input data
is invalid or an invariant fails.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from pathlib import Path as FsPath

from .entanglement import (EntanglementLedger, bootstrap_schedule, replay,
                           replenish_schedule)
from .errors import InputError, VQLError
from .graph import DIAMETER_BUDGET, diameter, estimate_diameter
from .io import parse_graph, serialize_graph, serialize_timeline
from .ring import RingTopology, build_ring
from .ring_router import ring_route
from .simulator import MODES, SimConfig, run_load_sim
from .sphere import (build_sphere, degree_formula, edge_count_formula,
                     layer_edge_count_formula, vertex_count_formula)
from .sphere_router import global_route, local_route

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
DEGREE_SCAN_LIMIT = 1 << 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        FsPath(path).write_text(text)


def _load(path: str):
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text)


def _parse_edges(spec: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, (s.strip() for s in spec.split(","))):
        try:
            u, v = (int(x) for x in item.split("-"))
        except ValueError:
            raise UsageError(f"bad edge {item!r}; expected U-V") from None
        out.append((u, v))
    return out


def cmd_gen(args, out) -> int:
    g = build_ring(args.n) if args.kind == "ring" else build_sphere(args.k)
    _write(args.out, serialize_graph(g), out)
    return EXIT_OK


def _check(out, name: str, ok: bool, detail: str) -> bool:
    out.write(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}\n")
    return ok


def cmd_stats(args, out) -> int:
    g = _load(args.file)
    n = g.vertex_count
    out.write(f"kind: {g.kind}\n")
    out.write(f"vertices: {n}\n")
    ok = True
    if n <= DEGREE_SCAN_LIMIT:
        degrees = [g.degree(v) for v in range(n)]
        out.write(f"edges: {sum(degrees) // 2}\n")
        hist = Counter(degrees)
        out.write("degree histogram: " + ", ".join(f"{d}:{c}" for d, c in sorted(hist.items())) + "\n")
        out.write(f"max qubit memory per node: {max(degrees)}\n")
    else:
        degrees = None
        out.write("degree scan skipped: graph too large\n")

    diam = None
    if n <= DIAMETER_BUDGET:
        diam = diameter(g)
        out.write(f"diameter: {diam}\n")
    elif args.estimate_samples:
        if args.seed is None:
            raise UsageError("--estimate-samples needs --seed")
        est = estimate_diameter(g, args.estimate_samples, random.Random(args.seed))
        out.write(f"diameter estimate (lower bound, {args.estimate_samples} sources): {est}\n")
    else:
        out.write(f"diameter: skipped, {n} vertices exceeds exact budget of {DIAMETER_BUDGET}\n")

    if isinstance(g, RingTopology):
        ok &= _check(out, "vertex count", n == 1 << g.n, f"{n} == 2^{g.n}")
        if degrees is not None:
            ok &= _check(out, "degree bound", max(degrees) <= 2 * g.n, f"max {max(degrees)} <= {2 * g.n}")
        if diam is not None:
            ok &= _check(out, "diameter bound", diam <= 2 * g.n - 1, f"{diam} <= {2 * g.n - 1}")
    else:
        k = g.k
        ok &= _check(out, "vertex count", n == vertex_count_formula(k), f"{n} == 10*4^{k}+2")
        for i in range(k + 1):
            m = len(g.edges_on_layer(i))
            ok &= _check(out, f"edges on layer {i}", m == layer_edge_count_formula(i), f"{m} == 30*4^{i}")
        ok &= _check(out, "edge count", g.edge_count() == edge_count_formula(k),
                     f"{g.edge_count()} == 10*4^{k + 1}-10")
        bad = [v for v in range(n) if g.degree(v) != degree_formula(k, g.vertex_layer(v))]
        ok &= _check(out, "degree formula", not bad, f"{len(bad)} vertices off")
        if diam is not None:
            ok &= _check(out, "diameter bound", diam <= 2 * k + 3, f"{diam} <= {2 * k + 3}")
        lengths = Counter(len(g.label(v)) for v in range(n))
        out.write("label length histogram: "
                  + ", ".join(f"{a}:{c}" for a, c in sorted(lengths.items())) + "\n")
    return EXIT_OK if ok else EXIT_DATA


def cmd_route(args, out) -> int:
    g = _load(args.file)
    rng = random.Random(args.seed)
    ledger = EntanglementLedger.full(g)
    if isinstance(g, RingTopology):
        if args.mode != "ring":
            raise UsageError(f"mode {args.mode!r} needs a sphere graph")
        trace = ring_route(args.src, args.dst, g, ledger, rng, fast=args.fast)
    elif args.mode == "global":
        trace = global_route(args.src, args.dst, g, ledger, rng)
    elif args.mode == "local":
        trace = local_route(args.src, args.dst, g, ledger, rng, fast=args.fast)
    else:
        raise UsageError("mode 'ring' needs a ring graph")
    out.write(" ".join(map(str, trace.path)) + "\n")
    if args.trace:
        out.write(f"hops: {trace.hops}\n")
        for s in trace.swap_events:
            out.write(f"swap at {s.node}: {s.left} <-> {s.right}\n")
    return EXIT_OK


def cmd_label(args, out) -> int:
    g = _load(args.file)
    if isinstance(g, RingTopology):
        raise InputError("ring vertices are addressed by their number; there is no label table")
    out.write(g.label(args.vertex).render() + "\n")
    return EXIT_OK


def cmd_bootstrap(args, out) -> int:
    g = _load(args.file)
    t = bootstrap_schedule(g)
    _write(args.out, serialize_timeline(t, g), out)
    return EXIT_OK


def cmd_replenish(args, out) -> int:
    g = _load(args.file)
    consumed = _parse_edges(args.consumed)
    ledger = EntanglementLedger(g, consumed)
    t = replenish_schedule(ledger, consumed)
    replay(ledger.copy(), t)
    _write(args.out, serialize_timeline(t, g), out)
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    g = _load(args.file)
    mode = args.mode or ("ring" if isinstance(g, RingTopology) else "sphere-local")
    report = run_load_sim(SimConfig(g, args.pairs, args.samples, args.seed, mode))
    _write(args.out, report.to_csv(), out)
    summary = report.summary_json()
    if args.out and args.out != "-":
        p = FsPath(args.out)
        FsPath(p.with_name(p.stem + ".summary.json")).write_text(summary)
        out.write(summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vqlnet", description="Ring and sphere VQL network toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="build a topology and write a graph file")
    gsub = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    r = gsub.add_parser("ring")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--out")
    s = gsub.add_parser("sphere")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    st = sub.add_parser("stats", help="counts, degrees, diameter and closed-form checks")
    st.add_argument("file")
    st.add_argument("--estimate-samples", type=int, default=0)
    st.add_argument("--seed", type=int)
    st.set_defaults(func=cmd_stats)

    ro = sub.add_parser("route", help="route one request")
    ro.add_argument("file")
    ro.add_argument("--from", dest="src", type=int, required=True)
    ro.add_argument("--to", dest="dst", type=int, required=True)
    ro.add_argument("--mode", choices=("ring", "global", "local"), required=True)
    ro.add_argument("--seed", type=int, required=True)
    ro.add_argument("--trace", action="store_true")
    ro.add_argument("--fast", action="store_true", help="reuse computed lookahead between hops")
    ro.set_defaults(func=cmd_route)

    la = sub.add_parser("label", help="print a sphere vertex label")
    la.add_argument("file")
    la.add_argument("--vertex", type=int, required=True)
    la.set_defaults(func=cmd_label)

    bo = sub.add_parser("bootstrap", help="schedule full entanglement from scratch")
    bo.add_argument("file")
    bo.add_argument("--out")
    bo.set_defaults(func=cmd_bootstrap)

    rp = sub.add_parser("replenish", help="schedule restoration of consumed VQLs")
    rp.add_argument("file")
    rp.add_argument("--consumed", required=True, help="comma-separated U-V edges")
    rp.add_argument("--out")
    rp.set_defaults(func=cmd_replenish)

    si = sub.add_parser("simulate", help="collision-under-load experiment")
    si.add_argument("file")
    si.add_argument("--pairs", type=int, required=True)
    si.add_argument("--samples", type=int, required=True)
    si.add_argument("--seed", type=int, required=True)
    si.add_argument("--mode", choices=MODES)
    si.add_argument("--out")
    si.set_defaults(func=cmd_simulate)
    return p


def run_command(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except VQLError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DATA
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
