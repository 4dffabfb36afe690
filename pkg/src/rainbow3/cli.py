"""Command-line surface: generate family graphs, color them, verify
colorings and certificates, solve small instances exactly, and print bound
reports.

Exit status is 0 on success or a true verdict, 1 on a false verdict, 2 on
usage, format or limit errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import _exact_or_augmented, bounds_report
from .coloring import (
    ColoringReport,
    EdgeColoring,
    SafetyCertificate,
    read_coloring,
    spanning_tree_coloring,
    three_dom_coloring,
    three_way_coloring,
    write_coloring,
)
from .domination import (
    DominationError,
    DominationKind,
    LimitError,
    three_way_dominating_set,
)
from .generators import (
    chain_example,
    french_windmill,
    gstar,
    random_min_degree,
    standard_family,
    threshold_example,
)
from .graphs import GraphError, read_edge_list, sdiam3_with_triple, write_edge_list
from .verify import VerifyLimitError, exact_rx3, is_3_rainbow, verify_certificate

_USAGE_ERRORS = (GraphError, DominationError, LimitError, VerifyLimitError)

METHOD_ALIASES = {
    "theorem3": "theorem3",
    "three-way": "theorem3",
    "theorem4": "theorem4",
    "three-dom": "theorem4",
    "spanning": "spanning",
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_json(data: dict) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")


def _cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "french-windmill":
        made = french_windmill(args.t)
        graph, labels = made.graph, made.labels
    elif fam == "threshold":
        made = threshold_example(args.t)
        graph, labels = made.graph, made.labels
    elif fam == "chain":
        made = chain_example(args.k, args.t)
        graph, labels = made.graph, made.labels
    elif fam == "gstar":
        made = gstar(args.delta, args.m)
        graph, labels = made.graph, made.labels
    elif fam == "random":
        graph, labels = random_min_degree(args.n, args.delta, args.seed), {}
    elif fam == "complete":
        graph, labels = standard_family("complete", args.n), {}
    elif fam == "complete-bipartite":
        graph, labels = standard_family("complete-bipartite", args.s, args.t), {}
    elif fam in ("path", "cycle", "star"):
        graph, labels = standard_family(fam, args.n), {}
    else:
        raise GraphError(f"unknown family {fam!r}")
    _write_text(args.out, write_edge_list(graph))
    if args.labels:
        _write_text(args.labels, json.dumps(labels, sort_keys=True) + "\n")
    return 0


def _auto_dom(graph, method: str):
    if method == "theorem3":
        return three_way_dominating_set(graph)
    return _exact_or_augmented(
        graph, DominationKind(connected=True, k_dominating=3), exact_limit=14
    )


def _cmd_color(args: argparse.Namespace) -> int:
    graph = read_edge_list(_read_text(args.infile))
    method = METHOD_ALIASES[args.method]
    certificates: list[SafetyCertificate] = []
    if method == "spanning":
        coloring = spanning_tree_coloring(graph)
        report = ColoringReport(
            method="spanning",
            n=graph.n,
            dom=(),
            d=0,
            num_colors=coloring.num_colors,
            inner_method="none",
        )
    else:
        if args.dom == "auto":
            dom = _auto_dom(graph, method)
        else:
            from .domination import USER, DominatingSet, k_dominating, k_way

            verts = frozenset(int(t) for t in _read_text(args.dom).split())
            kind = k_way(3) if method == "theorem3" else k_dominating(3)
            dom = DominatingSet(verts, kind, USER)
        if method == "theorem3":
            coloring, certificates, report = three_way_coloring(graph, dom)
        else:
            coloring, report = three_dom_coloring(graph, dom)
    _write_text(args.out, write_coloring(coloring, report))
    if args.certs:
        payload = {
            "dom": list(report.dom),
            "certificates": [
                {
                    "vertex": c.vertex,
                    "paths": [list(p) for p in c.paths],
                    "color_sets": [sorted(s) for s in c.color_sets],
                }
                for c in certificates
            ],
        }
        _write_text(args.certs, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graph, coloring, meta = read_coloring(_read_text(args.infile))
    report = is_3_rainbow(graph, coloring, max_colors=args.max_colors)
    payload = report.to_json_dict()
    ok = report.verdict
    if args.certs:
        data = json.loads(_read_text(args.certs))
        dom = frozenset(data["dom"]) if data.get("dom") else frozenset(meta.get("dom", ()))
        results = []
        for raw in data["certificates"]:
            cert = SafetyCertificate(
                vertex=raw["vertex"],
                paths=tuple(tuple(p) for p in raw["paths"]),
                color_sets=tuple(frozenset(s) for s in raw["color_sets"]),
            )
            results.append(verify_certificate(graph, coloring, dom, cert))
        payload["certificates"] = {
            "checked": len(results),
            "ok": all(results),
            "failing": [data["certificates"][i]["vertex"] for i, r in enumerate(results) if not r],
        }
        ok = ok and all(results)
    _print_json(payload)
    return 0 if ok else 1


def _cmd_exact(args: argparse.Namespace) -> int:
    graph = read_edge_list(_read_text(args.infile))
    value = exact_rx3(graph, kmax=args.kmax, max_edges=args.max_edges)
    if value is None:
        _print_json({"rx3": None, "status": f"exceeds kmax={args.kmax}"})
    else:
        _print_json({"rx3": value, "status": "exact"})
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    graph = read_edge_list(_read_text(args.infile))
    report = bounds_report(graph, exact_limit=args.exact_limit)
    _print_json(report.to_json_dict())
    return 0


def _cmd_steiner(args: argparse.Namespace) -> int:
    graph = read_edge_list(_read_text(args.infile))
    value, triple = sdiam3_with_triple(graph)
    _print_json({"sdiam3": value, "triple": list(triple)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbow3",
        description="3-rainbow colorings via dominating sets, with verification",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate a family graph as an edge list")
    p.add_argument(
        "family",
        choices=[
            "french-windmill",
            "threshold",
            "chain",
            "gstar",
            "random",
            "complete",
            "complete-bipartite",
            "path",
            "cycle",
            "star",
        ],
    )
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.add_argument("--labels", default=None, help="write the label map as JSON")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("color", help="color a graph read from a file or stdin")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--method", choices=sorted(METHOD_ALIASES), default="theorem3")
    p.add_argument("--dom", default="auto", help="'auto' or a file of vertex ids")
    p.add_argument("--out", default="-")
    p.add_argument("--certs", default=None, help="write safety certificates as JSON")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--certs", default=None, help="re-check a certificate file")
    p.add_argument("--max-colors", type=int, default=14)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact minimum 3-rainbow color count")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--max-edges", type=int, default=14)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("bounds", help="print the bound report as JSON")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--exact-limit", type=int, default=14)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("steiner", help="Steiner 3-diameter and an extremal triple")
    p.add_argument("--in", dest="infile", default="-")
    p.set_defaults(func=_cmd_steiner)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"rainbow3: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
