"""Command-line front end.

Subcommands: gen, factor, color, verify, hunt, export. All file formats
are the JSON shapes defined in bigraph and checker; "-" means stdin or
stdout. Exit codes: 0 success or verified, 1 definitive negative, 2
unknown or bounded out, 3 input error.
"""

import argparse
import json
import multiprocessing
import os
import sys

from .bigraph import (
    BipartiteMultigraph,
    biregular34_k,
    from_json,
    to_dot,
    to_json,
    xv,
    yv,
)
from .checker import (
    PathFactor,
    cert_from_dict,
    check_full_3regular,
    check_proper,
    check_proper_path_factor,
    coloring_from_dict,
    coloring_to_dict,
    factor_from_dict,
    factor_to_dict,
    interval_violation,
    path_factor_violation,
    vertex_colors,
)
from .coloring import PALETTE, color_from_factor
from .generators import (
    claw_triple_graph,
    eight_triples_graph,
    random_34_biregular,
    subset_graph_6,
    two_eight_triples,
)
from .oracle import oracle_interval_coloring, oracle_path_factor
from .pathfactor import (
    p7_factor_via_24,
    search_full_3regular,
    search_proper_path_factor,
)
from .transversal import factor_from_mixed_transversal

EXIT_OK = 0
EXIT_NONE = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _fail(msg: str) -> "SystemExit":
    print(f"error: {msg}", file=sys.stderr)
    return SystemExit(EXIT_INPUT)


def _load_graph(path: str) -> BipartiteMultigraph:
    try:
        return from_json(_read_text(path))
    except (OSError, ValueError) as exc:
        raise _fail(f"cannot read graph from {path}: {exc}") from exc


def _load_json(path: str, what: str) -> dict:
    try:
        return json.loads(_read_text(path))
    except (OSError, ValueError) as exc:
        raise _fail(f"cannot read {what} from {path}: {exc}") from exc


def _report(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_gen(args: argparse.Namespace) -> int:
    factor = None
    if args.family == "subset6":
        g, factor = subset_graph_6()
    elif args.family == "eight-triples":
        g = eight_triples_graph()
    elif args.family == "claw-triple":
        g = claw_triple_graph()
    elif args.family == "two-eight-triples":
        g, factor = two_eight_triples()
    else:
        if args.k is None:
            raise _fail("--family random needs --k")
        g = random_34_biregular(args.k, seed=args.seed, simple_only=not args.multi)
    _write_text(args.out, to_json(g) + "\n")
    if args.factor_out:
        if factor is None:
            raise _fail(f"family {args.family} has no canonical factor")
        _write_text(args.factor_out, json.dumps(factor_to_dict(factor)) + "\n")
    return EXIT_OK


def _factor_lengths(factor: PathFactor) -> list[int]:
    return sorted(p.length for p in factor.paths)


def cmd_factor(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        biregular34_k(g)
    except ValueError as exc:
        raise _fail(str(exc)) from exc

    report: dict = {"method": args.method}
    factor = None
    if args.method == "search":
        res = search_proper_path_factor(g, max_nodes=args.max_nodes)
        report["status"] = res.status
        report["nodes"] = res.nodes
        factor = res.factor
    elif args.method == "oracle":
        factor = oracle_path_factor(g)
        report["status"] = "found" if factor else "none"
    elif args.method == "via24":
        factor = p7_factor_via_24(g)
        if factor is None:
            report["status"] = "unknown"
            report["reason"] = "no-y-cover"
        else:
            report["status"] = "found"
    else:
        cert = search_full_3regular(g)
        if cert is None:
            report["status"] = "unknown"
            report["reason"] = "no-full-3regular-subgraph"
        else:
            factor = factor_from_mixed_transversal(g, cert)
            if factor is None:
                report["status"] = "unknown"
                report["reason"] = "no-mixed-transversal"
            else:
                report["status"] = "found"

    if factor is not None:
        assert check_proper_path_factor(g, factor)
        report["lengths"] = _factor_lengths(factor)
        if args.out:
            _write_text(args.out, json.dumps(factor_to_dict(factor)) + "\n")
    _report(report)
    return {"found": EXIT_OK, "none": EXIT_NONE}.get(report["status"], EXIT_UNKNOWN)


def cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        factor = factor_from_dict(_load_json(args.factor, "factor"))
    except ValueError as exc:
        raise _fail(str(exc)) from exc
    why = path_factor_violation(g, factor)
    if why is not None:
        raise _fail(f"factor rejected: {why}")
    coloring = color_from_factor(g, factor)
    out = args.out or "-"
    _write_text(out, json.dumps(coloring_to_dict(coloring)) + "\n")
    if args.dot:
        colors = {eid: c for eid, c in enumerate(coloring.colors)}
        _write_text(args.dot, to_dot(g, colors))
    if args.summary:
        verts = [xv(i) for i in range(g.x_count)] + [yv(j) for j in range(g.y_count)]
        for v in verts:
            got = vertex_colors(g, coloring, v)
            print(f"{v.label}: {' '.join(map(str, got))}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not (args.factor or args.coloring or args.cert or args.oracle):
        raise _fail("nothing to verify: pass --factor, --coloring, --cert or --oracle")
    worst = EXIT_OK

    if args.factor:
        factor = factor_from_dict(_load_json(args.factor, "factor"))
        why = path_factor_violation(g, factor)
        if why is None:
            print(f"factor: ok ({len(factor.paths)} paths, lengths {_factor_lengths(factor)})")
        else:
            print(f"factor: FAIL ({why})")
            worst = max(worst, EXIT_NONE)

    if args.coloring:
        coloring = coloring_from_dict(_load_json(args.coloring, "coloring"))
        if len(coloring.colors) != g.edge_count:
            raise _fail(f"coloring covers {len(coloring.colors)} edges, graph has {g.edge_count}")
        if not check_proper(g, coloring):
            print("coloring: FAIL (not proper)")
            worst = max(worst, EXIT_NONE)
        else:
            bad = interval_violation(g, coloring)
            if bad is None:
                print(f"coloring: ok (proper interval, palette {coloring.palette_size})")
            else:
                v, got = bad
                print(f"coloring: FAIL (colors {list(got)} at {v.label} are not consecutive)")
                worst = max(worst, EXIT_NONE)

    if args.cert:
        cert = cert_from_dict(_load_json(args.cert, "subgraph certificate"))
        if check_full_3regular(g, cert):
            print(f"cert: ok (full 3-regular subgraph, {len(cert.edge_set)} edges)")
        else:
            print("cert: FAIL (not a full 3-regular subgraph)")
            worst = max(worst, EXIT_NONE)

    if args.oracle:
        try:
            biregular34_k(g)
        except ValueError as exc:
            raise _fail(str(exc)) from exc
        factor = oracle_path_factor(g)
        print(f"oracle path factor: {'found' if factor else 'none (definitive)'}")
        coloring = oracle_interval_coloring(g, PALETTE)
        print(f"oracle interval {PALETTE}-coloring: {'found' if coloring else 'none (definitive)'}")
        if factor is None or coloring is None:
            worst = max(worst, EXIT_NONE)

    return worst


def _hunt_trial(task: tuple[int, int, int]) -> tuple[str, dict | None]:
    k, seed, max_nodes = task
    g = random_34_biregular(k, seed=seed, simple_only=True)
    res = search_proper_path_factor(g, max_nodes=max_nodes)
    if res.status != "none":
        return res.status, None
    # a definitive miss is publishable; double-check before shouting
    confirmed = oracle_path_factor(g) is None
    return "none" if confirmed else "disagree", json.loads(to_json(g))


def cmd_hunt(args: argparse.Namespace) -> int:
    tasks = [(args.k, args.seed + i, args.max_nodes) for i in range(args.trials)]
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(_hunt_trial, tasks, chunksize=16)
    else:
        results = [_hunt_trial(t) for t in tasks]

    tallies = {"factor": 0, "none": 0, "unknown": 0}
    hits = []
    disagreements = []
    for i, (status, graph) in enumerate(results):
        if status == "found":
            tallies["factor"] += 1
        elif status == "unknown":
            tallies["unknown"] += 1
        elif status == "disagree":
            disagreements.append(args.seed + i)
        else:
            tallies["none"] += 1
            hits.append({"seed": args.seed + i, "graph": graph})

    for hit in hits:
        os.makedirs(args.archive, exist_ok=True)
        name = os.path.join(args.archive, f"counterexample_k{args.k}_seed{hit['seed']}.json")
        with open(name, "w", encoding="utf-8") as fh:
            json.dump(hit["graph"], fh)
        print(f"COUNTEREXAMPLE: no proper path factor; archived {name}", file=sys.stderr)

    _report({
        "k": args.k,
        "trials": args.trials,
        "seed": args.seed,
        "max_nodes": args.max_nodes,
        "tallies": tallies,
        "counterexample_seeds": [h["seed"] for h in hits],
        "search_oracle_disagreements": disagreements,
    })
    return EXIT_NONE if hits or disagreements else EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    colors = None
    if args.coloring:
        coloring = coloring_from_dict(_load_json(args.coloring, "coloring"))
        if len(coloring.colors) != g.edge_count:
            raise _fail(f"coloring covers {len(coloring.colors)} edges, graph has {g.edge_count}")
        colors = {eid: c for eid, c in enumerate(coloring.colors)}
    _write_text(args.dot, to_dot(g, colors))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="interval6",
        description="Interval 6-colorings of (3,4)-biregular bipartite multigraphs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an example or random instance")
    p.add_argument("--family", required=True,
                   choices=["subset6", "eight-triples", "claw-triple", "random", "two-eight-triples"])
    p.add_argument("--k", type=int, help="size parameter for --family random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--simple", action="store_true", help="reject parallel edges (default)")
    p.add_argument("--multi", action="store_true", help="allow parallel edges")
    p.add_argument("--out", default="-", help="graph JSON destination")
    p.add_argument("--factor-out", help="also write the family's canonical factor")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("factor", help="find a proper path factor")
    p.add_argument("--in", dest="graph", required=True, help="graph JSON")
    p.add_argument("--method", default="search",
                   choices=["search", "via24", "transversal", "oracle"])
    p.add_argument("--max-nodes", type=int, default=10_000_000)
    p.add_argument("--out", help="factor JSON destination")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("color", help="interval 6-coloring from a factor")
    p.add_argument("--in", dest="graph", required=True, help="graph JSON")
    p.add_argument("--factor", required=True, help="factor JSON")
    p.add_argument("--out", help="coloring JSON destination (default stdout)")
    p.add_argument("--dot", help="also write DOT with colored edges")
    p.add_argument("--summary", action="store_true", help="print per-vertex color table")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check certificates against a graph")
    p.add_argument("--in", dest="graph", required=True, help="graph JSON")
    p.add_argument("--factor", help="path factor JSON")
    p.add_argument("--coloring", help="edge coloring JSON")
    p.add_argument("--cert", help="full 3-regular subgraph JSON")
    p.add_argument("--oracle", action="store_true",
                   help="exhaustive factor and coloring existence checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="search random instances for counterexamples")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=10_000_000)
    p.add_argument("--archive", default="counterexamples",
                   help="directory for archived counterexample instances")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("export", help="DOT rendering of a graph")
    p.add_argument("--in", dest="graph", required=True, help="graph JSON")
    p.add_argument("--coloring", help="edge coloring JSON for colored edges")
    p.add_argument("--dot", default="-", help="DOT destination (default stdout)")
    p.set_defaults(func=cmd_export)

    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if getattr(args, "simple", False) and getattr(args, "multi", False):
        raise _fail("--simple and --multi are mutually exclusive")
    try:
        return args.func(args)
    except SystemExit:
        raise
    except ValueError as exc:
        raise _fail(str(exc)) from None


if __name__ == "__main__":
    sys.exit(main())
