"""Command-line interface.

Exit codes: 0 for a positive result, 1 for a negative mathematical
result (no partitions, exhausted search, failed verification,
infeasible optimal height), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blocks as blocks_mod
from .broadcast import ldps_from_trace, schedule, validate, format_trace
from .construct import ConstructionFailure, construct_two_ldps
from .cycles import find_separating_chordal, odd_cycle_through
from .formats import (
    dot_graph,
    dot_ldp_set,
    dot_partition,
    dot_trace_steps,
    read_ldp_json,
    write_ldp_json,
)
from .graphs import Graph, GraphParseError, format_edge_list, generate, metrics, parse_graph
from .partitions import (
    LdpSet,
    bfs_partition,
    bounds,
    optimal_height_feasible,
    verify_ldp_set,
    verify_partition,
)
from .search import brute_force

OK = 0
NEGATIVE = 1
USAGE = 2


class CliError(Exception):
    pass


def _parse_gen_spec(spec: str) -> Graph:
    name, _, tail = spec.partition(":")
    params: list[int] = []
    if tail:
        try:
            params = [int(x) for x in tail.split(",")]
        except ValueError:
            raise CliError(f"bad generator parameters in {spec!r}") from None
    try:
        return generate(name, *params)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "gen", None):
        return _parse_gen_spec(args.gen)
    if getattr(args, "graph", None):
        try:
            with open(args.graph) as fh:
                return parse_graph(fh.read())
        except OSError as exc:
            raise CliError(f"cannot read {args.graph}: {exc}") from None
        except GraphParseError as exc:
            raise CliError(f"bad edge list {args.graph}: {exc}") from None
    raise CliError("an input graph is required: --graph <path> or --gen <spec>")


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_root(g: Graph, args: argparse.Namespace) -> int:
    root = getattr(args, "root", None)
    if root is None:
        raise CliError("this command needs --root <vertex>")
    if not 0 <= root < g.n:
        raise CliError(f"root {root} is not a vertex (graph has {g.n} vertices)")
    return root


def _cmd_gen(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.format == "dot":
        _emit(args, dot_graph(g))
    else:
        _emit(args, format_edge_list(g))
    return OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    dec = blocks_mod.block_decomposition(g)
    info: dict[str, object] = {
        "vertices": g.n,
        "edges": g.edge_count(),
        "blocks": [
            {"vertices": sorted(b), "kind": k}
            for b, k in zip(dec.blocks, dec.kinds)
        ],
        "cut_vertices": sorted(dec.cut_vertices),
    }
    if args.root is not None:
        root = _require_root(g, args)
        m = metrics(g, root)
        info["root"] = root
        info["ecc"] = m.ecc
        info["girth"] = m.girth
        info["local_girth"] = m.local_girth
        info["bipartite"] = m.bipartite
        if m.bipartition is not None:
            info["bipartition"] = [sorted(m.bipartition[0]), sorted(m.bipartition[1])]
        info["distances"] = list(m.distances)
    if args.format == "json":
        _emit(args, json.dumps(info, indent=2) + "\n")
    elif args.format == "dot":
        _emit(args, dot_graph(g))
    else:
        lines = [f"vertices: {info['vertices']}", f"edges: {info['edges']}"]
        for entry in info["blocks"]:  # type: ignore[union-attr]
            verts = ",".join(str(v) for v in entry["vertices"])  # type: ignore[index]
            lines.append(f"block {{{verts}}}: {entry['kind']}")  # type: ignore[index]
        cuts = ",".join(str(v) for v in info["cut_vertices"])  # type: ignore[arg-type]
        lines.append(f"cut vertices: {{{cuts}}}")
        if args.root is not None:
            lines.append(f"root: {info['root']}")
            lines.append(f"ecc: {info['ecc']}")
            lines.append(f"girth: {info['girth'] if info['girth'] is not None else 'none'}")
            lines.append(
                "local girth: "
                + (str(info["local_girth"]) if info["local_girth"] is not None else "none")
            )
            lines.append(f"bipartite: {'yes' if info['bipartite'] else 'no'}")
        _emit(args, "\n".join(lines) + "\n")
    return OK


def _cmd_decide2(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    root = _require_root(g, args)
    result = construct_two_ldps(g, root)
    if isinstance(result, ConstructionFailure):
        report: dict[str, object] = {
            "decision": "no",
            "condition": result.condition,
            "block": sorted(result.block),
            "reason": result.message,
        }
        if args.format == "json":
            _emit(args, json.dumps(report, indent=2) + "\n")
        else:
            _emit(args, f"no: {result.message}\n")
        return NEGATIVE
    routes = _decision_routes(g, root)
    if args.format == "json":
        _emit(args, json.dumps({"decision": "yes", "blocks": routes}, indent=2) + "\n")
    else:
        lines = ["yes"]
        for entry in routes:
            verts = ",".join(str(v) for v in entry["block"])  # type: ignore[index]
            lines.append(f"block {{{verts}}}: {entry['route']}")  # type: ignore[index]
        _emit(args, "\n".join(lines) + "\n")
    return OK


def _decision_routes(g: Graph, root: int) -> list[dict[str, object]]:
    from .graphs import bipartition, components_without

    dec = blocks_mod.block_decomposition(g)
    routes: list[dict[str, object]] = []
    for comp in components_without(g, root):
        block = next(
            dec.blocks[i]
            for i in dec.blocks_containing(root)
            if (dec.blocks[i] - {root}) <= comp
        )
        if bipartition(g, block) is not None:
            cert = find_separating_chordal(g, root, within=block)
            assert cert is not None
            routes.append(
                {
                    "block": sorted(block),
                    "route": (
                        f"bipartite, certificate a={cert.a} b={cert.b} "
                        f"d={cert.d} p={cert.p}"
                    ),
                    "certificate": {
                        "cycle": list(cert.cycle.vertices),
                        "chordal_path": list(cert.chordal_path.vertices),
                        "a": cert.a,
                        "b": cert.b,
                        "d": cert.d,
                        "p": cert.p,
                    },
                }
            )
        else:
            cyc = odd_cycle_through(g, root, within=block)
            routes.append(
                {
                    "block": sorted(block),
                    "route": f"non-bipartite, odd cycle of length {cyc.length}",
                    "odd_cycle": list(cyc.vertices),
                }
            )
    return routes


def _ldp_output(args: argparse.Namespace, g: Graph, ldp: LdpSet) -> None:
    if args.format == "dot":
        if ldp.k == 1:
            _emit(args, dot_partition(g, ldp.partitions[0]))
        else:
            _emit(args, dot_ldp_set(g, ldp))
    elif args.format == "text":
        lines = [f"root {ldp.root} k {ldp.k} max-height {ldp.max_height}"]
        for i, part in enumerate(ldp.partitions):
            levels = " | ".join(
                ",".join(str(v) for v in sorted(level)) for level in part.levels
            )
            lines.append(f"member {i} (height {part.height}): {levels}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, write_ldp_json(ldp))


def _cmd_construct(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    root = _require_root(g, args)
    k = args.k if args.k is not None else 2
    if k == 1:
        ldp = LdpSet(root=root, partitions=(bfs_partition(g, root),))
    elif k == 2:
        result = construct_two_ldps(g, root)
        if isinstance(result, ConstructionFailure):
            sys.stderr.write(result.message + "\n")
            return NEGATIVE
        ldp = result
    else:
        raise CliError("construct supports --k 1 or 2; use search for larger k")
    _ldp_output(args, g, ldp)
    return OK


def _cmd_search(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    root = _require_root(g, args)
    if args.k is None:
        raise CliError("search needs --k")
    cap = args.cap if args.cap is not None else g.n - 1
    try:
        found = brute_force(g, root, args.k, cap)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if found is None:
        _emit(args, "exhausted\n")
        return NEGATIVE
    _ldp_output(args, g, found)
    return OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if not args.ldp:
        raise CliError("verify needs --ldp <path>")
    try:
        with open(args.ldp) as fh:
            doc = read_ldp_json(g, fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.ldp}: {exc}") from None
    except ValueError as exc:
        raise CliError(f"bad LDP document: {exc}") from None
    for i, part in enumerate(doc.partitions):
        bad = verify_partition(g, part)
        if bad is not None:
            _emit(args, f"violation in partition {i}: {bad.message}\n")
            return NEGATIVE
    if len(doc.partitions) > 1 or doc.root is not None:
        if doc.root is None:
            _emit(args, "violation: multiple partitions need a common root\n")
            return NEGATIVE
        ldp = doc.to_ldp_set()
        bad = verify_ldp_set(g, ldp)
        if bad is not None:
            _emit(args, f"violation: {bad.message}\n")
            return NEGATIVE
        _emit(args, f"ok: {ldp.k} level-disjoint partition(s) rooted at {ldp.root}, max height {ldp.max_height}\n")
        return OK
    _emit(args, "ok: level partition\n")
    return OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if not args.ldp:
        raise CliError("simulate needs --ldp <path>")
    try:
        with open(args.ldp) as fh:
            doc = read_ldp_json(g, fh.read())
        ldp = doc.to_ldp_set()
    except OSError as exc:
        raise CliError(f"cannot read {args.ldp}: {exc}") from None
    except ValueError as exc:
        raise CliError(f"bad LDP document: {exc}") from None
    bad = verify_ldp_set(g, ldp)
    if bad is not None:
        sys.stderr.write(f"input does not verify: {bad.message}\n")
        return NEGATIVE
    trace = schedule(g, ldp)
    problem = validate(g, trace)
    if problem is not None:
        sys.stderr.write(f"derived trace invalid: {problem.message}\n")
        return NEGATIVE
    ldps_from_trace(g, trace)
    if args.format == "dot":
        _emit(args, dot_trace_steps(g, trace))
    elif args.format == "json":
        payload = {
            "root": trace.root,
            "messages": trace.messages,
            "makespan": trace.makespan,
            "steps": [
                [[tr.sender, tr.receiver, tr.message] for tr in step]
                for step in trace.steps
            ],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, format_trace(trace))
    return OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    root = _require_root(g, args)
    k = args.k if args.k is not None else 2
    b = bounds(g, root, k)
    info: dict[str, object] = {
        "root": root,
        "k": k,
        "max_count": b.max_count,
        "ecc": b.ecc,
        "bipartite": b.bipartite,
        "height_floor": b.height_floor,
    }
    feasible = True
    if k >= 2:
        verdict = optimal_height_feasible(g, root, k)
        feasible = verdict.feasible
        info["optimal_height_feasible"] = verdict.feasible
        info["local_girth"] = verdict.local_girth
        info["witness"] = verdict.witness
    if args.format == "json":
        _emit(args, json.dumps(info, indent=2) + "\n")
    else:
        lines = [
            f"max partition count (deg): {b.max_count}",
            f"eccentricity: {b.ecc}",
            f"bipartite: {'yes' if b.bipartite else 'no'}",
            f"height floor for k={k}: {b.height_floor}",
        ]
        if k >= 2:
            lines.append(
                "optimal height: "
                + ("feasible" if feasible else "infeasible")
                + f" ({info['witness']})"
            )
        _emit(args, "\n".join(lines) + "\n")
    return OK if feasible else NEGATIVE


def _cmd_report(args: argparse.Namespace) -> int:
    from .report import render_report

    g = _load_graph(args)
    root = _require_root(g, args)
    k = args.k if args.k is not None else 2
    ldp: LdpSet | None = None
    if k == 1:
        ldp = LdpSet(root=root, partitions=(bfs_partition(g, root),))
    elif k == 2:
        result = construct_two_ldps(g, root)
        ldp = None if isinstance(result, ConstructionFailure) else result
    else:
        cap = args.cap if args.cap is not None else g.n - 1
        ldp = brute_force(g, root, k, cap)
    trace = schedule(g, ldp) if ldp is not None else None
    out_dir = args.out_dir or "ldpsim-report"
    written = render_report(g, root, k, out_dir, ldp=ldp, trace=trace)
    for path in written:
        sys.stdout.write(path + "\n")
    if ldp is None:
        sys.stdout.write(f"note: no {k} rooted level-disjoint partitions found\n")
        return NEGATIVE
    return OK


def _add_common(p: argparse.ArgumentParser, root: bool = True) -> None:
    p.add_argument("--graph", help="edge-list file")
    p.add_argument("--gen", help="generator spec family:param[,param]")
    if root:
        p.add_argument("--root", type=int, help="root vertex id")
    p.add_argument("--format", choices=("text", "json", "dot"), default=None)
    p.add_argument("--out", help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldpsim",
        description="Level-disjoint partitions and simultaneous broadcast schedules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit the edge list of a graph family")
    _add_common(p, root=False)

    p = sub.add_parser("analyze", help="metrics and block decomposition")
    _add_common(p)

    p = sub.add_parser("decide2", help="two-partition decision with evidence")
    _add_common(p)

    p = sub.add_parser("construct", help="build k=1 or k=2 rooted partitions")
    _add_common(p)
    p.add_argument("--k", type=int)

    p = sub.add_parser("search", help="exhaustive search for k rooted partitions")
    _add_common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--cap", type=int, help="height cap (default n-1)")

    p = sub.add_parser("verify", help="verify an LDP JSON document")
    _add_common(p, root=False)
    p.add_argument("--ldp", help="LDP JSON file")

    p = sub.add_parser("simulate", help="derive and validate a broadcast trace")
    _add_common(p, root=False)
    p.add_argument("--ldp", help="LDP JSON file")

    p = sub.add_parser("bounds", help="degree/height floors and feasibility")
    _add_common(p)
    p.add_argument("--k", type=int)

    p = sub.add_parser("report", help="write CSV and figures for a root")
    _add_common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--out-dir", help="report output directory")
    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "analyze": _cmd_analyze,
    "decide2": _cmd_decide2,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
    "bounds": _cmd_bounds,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = "json" if args.command in ("construct", "search") else "text"
    try:
        return _HANDLERS[args.command](args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE
    except GraphParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
