"""Command line front end.

Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 invalid
certificate, 4 sweep mismatch.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import boxes, gridpaths, patterns, svg, sweeps, widths
from .ceo import CeoPreconditionError, ceo_instance_from_json, solve_ceo
from .gallery import fixture_names, get_fixture
from .graphs import Partition, Representation, format_graph_text, graph_to_json, load_graph
from .ordering import (KINDS, Budget, exact_thinness, is_consistent,
                       min_classes_for_order, rep_from_json, rep_to_json,
                       verify_certificate)


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_graph_arg(path: str, fmt: str):
    try:
        return load_graph(_read_text(path), fmt)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot parse graph {path}: {exc}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise CliError(f"expected a list of integers, got {text!r}") from exc


def _write_output(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    g = _load_graph_arg(args.graph, args.format)
    budget = None
    if args.budget_seconds or args.budget_nodes:
        budget = Budget(max_seconds=args.budget_seconds, max_nodes=args.budget_nodes)
    res = exact_thinness(g, args.kind, budget)
    payload = rep_to_json(res.certificate, args.kind)
    payload["exact"] = res.exact
    payload["lower_bound"] = res.lower_bound
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"{args.kind}={res.value}" + ("" if res.exact else
                                            f" (upper bound; proven >= {res.lower_bound})"))
        print(json.dumps(payload))
    if not res.exact:
        return 2
    return 0


def cmd_order_check(args) -> int:
    g = _load_graph_arg(args.graph, args.format)
    order = _parse_int_list(args.order)
    if sorted(order) != list(range(g.n)):
        raise CliError("order must be a permutation of the vertices")
    if args.classes:
        classes = _parse_int_list(args.classes)
        try:
            rep = Representation(tuple(order),
                                 Partition(tuple(classes), max(classes) + 1))
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        ok, wit = is_consistent(g, rep, args.mode)
        if ok and args.independent:
            ok = all(rep.partition.class_of[u] != rep.partition.class_of[v]
                     for u, v in g.edges())
            wit = None if ok else "a class contains an edge"
        print(f"consistent={ok}" + (f" witness={wit}" if not ok else ""))
        return 0
    part = min_classes_for_order(g, order, args.mode, args.independent)
    print(f"classes={part.k}")
    print(json.dumps({"classes": list(part.class_of), "k": part.k}))
    return 0


def cmd_extend(args) -> int:
    try:
        data = json.loads(_read_text(args.instance))
        g, partition, porder, mode = ceo_instance_from_json(data)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot parse CEO instance: {exc}") from exc
    if args.mode:
        mode = args.mode
    try:
        order, cycle = solve_ceo(g, partition, porder, mode)
    except CeoPreconditionError as exc:
        raise CliError(f"precondition violated: {exc}") from exc
    if order is not None:
        print("feasible")
        print(json.dumps({"order": order}))
    else:
        print("infeasible")
        print(json.dumps({"cycle": cycle}))
    return 0


def _check_box_model(m) -> dict:
    label, wit = boxes.check_diagonal(m)
    report: dict = {"kind": "box", "diagonal": label}
    if wit is not None:
        report["diagonal_witness"] = list(wit)
    if label == "two_diagonal":
        ok, pair = boxes.check_blocking(m)
        report["blocking"] = ok
        if pair:
            report["blocking_witness"] = list(pair)
    if label in ("two_diagonal", "weakly_two_diagonal"):
        ok, pair = boxes.check_bi_semi_proper(m)
        report["bi_semi_proper"] = ok
        if pair:
            report["bi_semi_proper_witness"] = list(pair)
    report["edges"] = boxes.intersection_graph(m).edge_count()
    return report


def _check_grid_model(m) -> dict:
    report: dict = {"kind": "grid", "max_bends": m.max_bends()}
    if all(p.bends == 1 for p in m.paths):
        ok, pair = gridpaths.check_blocking_l(m)
        report["blocking_l"] = ok
        if pair:
            report["blocking_l_witness"] = list(pair)
    report["edges"] = gridpaths.path_intersection_graph(m).edge_count()
    return report


def cmd_model(args) -> int:
    if args.load:
        try:
            data = json.loads(_read_text(args.load))
        except json.JSONDecodeError as exc:
            raise CliError(f"cannot parse model: {exc}") from exc
        model = (boxes.box_model_from_json(data) if "boxes" in data
                 else gridpaths.grid_model_from_json(data))
    else:
        if not (args.graph and args.cert and args.build):
            raise CliError("model needs either --load, or a graph, --cert and --build")
        g = _load_graph_arg(args.graph, args.format)
        try:
            rep, kind = rep_from_json(json.loads(_read_text(args.cert)))
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot parse certificate: {exc}") from exc
        if not verify_certificate(g, rep, kind):
            print("certificate does not verify against the graph", file=sys.stderr)
            return 3
        try:
            if args.build == "m1":
                model = boxes.build_m1(g, rep)
            elif args.build == "m2":
                model = boxes.build_m2(boxes.build_m1(g, rep))
            elif args.build == "m3":
                model = gridpaths.build_m3(g, rep, independent=args.independent)
            elif args.build == "m4":
                model = gridpaths.build_m4(g, rep)
            else:
                model = gridpaths.build_vpg_3thin(g, rep, independent=args.independent)
        except ValueError as exc:
            print(f"cannot build model: {exc}", file=sys.stderr)
            return 3
    is_box = isinstance(model, boxes.BoxModel)
    if args.check:
        report = _check_box_model(model) if is_box else _check_grid_model(model)
        print(json.dumps(report, indent=2))
    else:
        payload = (boxes.box_model_to_json(model) if is_box
                   else gridpaths.grid_model_to_json(model))
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    if args.svg:
        text = svg.render_box_model(model) if is_box else svg.render_grid_model(model)
        _write_output(text, args.svg)
    return 0


def cmd_pattern(args) -> int:
    if args.list:
        for name, p in patterns.builtin_patterns().items():
            print(f"{name}: {patterns.format_pattern(p)}")
        return 0
    g = _load_graph_arg(args.graph, args.format)
    if args.classify:
        report = patterns.classify(g)
        print(json.dumps(report, indent=2))
        return 0
    if not args.family:
        raise CliError("pattern needs --family (or --list/--classify)")
    try:
        family = patterns.parse_family(args.family)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    flavor = family[0].flavor
    if args.order:
        order = _parse_int_list(args.order)
        if flavor != "plain":
            raise CliError("--order occurrence checks support plain patterns")
        for p in family:
            wit = patterns.occurs(g, order, p)
            if wit is not None:
                print(f"occurs name={p.name} witness={list(wit)}")
                return 0
        print("avoids")
        return 0
    if flavor == "plain":
        order = patterns.ord_membership(g, family)
        if order is not None:
            print("member")
            print(json.dumps({"order": order}))
        else:
            print("non-member")
    elif flavor == "bipartite":
        res = patterns.biord_membership(g, family)
        if res is not None:
            (oa, ob), _ = res
            print("member")
            print(json.dumps({"side_a": oa, "side_b": ob}))
        else:
            print("non-member")
    else:
        res = patterns.bicolord_membership(g, family)
        if res is not None:
            order, coloring = res
            print("member")
            print(json.dumps({"order": order, "coloring": coloring}))
        else:
            print("non-member")
    return 0


def cmd_bounds(args) -> int:
    g = _load_graph_arg(args.graph, args.format)
    report: dict = {"n": g.n, "m": g.edge_count()}
    if g.n <= 12:
        bw, f = widths.bandwidth(g)
        report["bandwidth"] = bw
        report["labeling"] = {"f": f}
    if g.n <= 16:
        pw, pd = widths.pathwidth(g)
        report["pathwidth"] = pw
        report["decomposition"] = widths.pd_to_json(pd)
    if g.n <= 20:
        report["iso_peak"] = widths.iso_peak(g)
    if g.is_connected():
        report["diameter"] = widths.diameter(g)
    print(json.dumps(report, indent=2))
    return 0


def cmd_gallery(args) -> int:
    if args.list:
        for name in fixture_names():
            print(name)
        return 0
    try:
        fx = get_fixture(args.name)
    except KeyError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        payload = {"name": fx.name, "graph": graph_to_json(fx.graph),
                   "facts": [[f.prop, f.value, f.status] for f in fx.facts]}
        if fx.representation is not None:
            payload["certificate"] = rep_to_json(fx.representation, fx.rep_kind)
        if fx.box_model is not None:
            payload["box_model"] = boxes.box_model_to_json(fx.box_model)
        if fx.grid_model is not None:
            payload["grid_model"] = gridpaths.grid_model_to_json(fx.grid_model)
        print(json.dumps(payload, indent=2))
    else:
        comments = [f"fixture {fx.name}"]
        comments += [f"fact: {f.prop} = {f.value} [{f.status}]" for f in fx.facts]
        sys.stdout.write(format_graph_text(fx.graph, comments))
    return 0


def cmd_sweep(args) -> int:
    if args.theorem not in sweeps.SWEEPS:
        raise CliError(f"unknown theorem {args.theorem!r}; "
                       f"known: {', '.join(sorted(sweeps.SWEEPS))}")
    fn = sweeps.SWEEPS[args.theorem]
    sig = inspect.signature(fn)
    kwargs = {}
    for cli_name, value in (("n_max", args.n), ("samples", args.samples),
                            ("seed", args.seed),
                            ("budget_seconds", args.budget_seconds),
                            ("orders_per_graph", args.orders)):
        if value is not None and cli_name in sig.parameters:
            kwargs[cli_name] = value
    report = fn(**kwargs)
    print(report.summary())
    for m in report.mismatches:
        print(f"  mismatch: {m}")
    return 0 if report.ok else 4


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="thinness",
        description="Thinness solvers, intersection models, and ordered patterns.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph", help="graph file (text or JSON), '-' for stdin")
        p.add_argument("--format", choices=("auto", "text", "json"), default="auto")

    p = sub.add_parser("analyze", help="exact thinness of one of the four kinds")
    add_graph_arg(p)
    p.add_argument("--kind", choices=KINDS, default="thin")
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("order-check", help="consistency or minimum classes for an order")
    add_graph_arg(p)
    p.add_argument("--order", required=True, help="comma separated vertex order")
    p.add_argument("--classes", help="comma separated class per vertex")
    p.add_argument("--mode", choices=("consistent", "strong"), default="consistent")
    p.add_argument("--independent", action="store_true")
    p.set_defaults(fn=cmd_order_check)

    p = sub.add_parser("extend", help="solve an order-extension instance (JSON)")
    p.add_argument("instance", help="instance JSON file, '-' for stdin")
    p.add_argument("--mode", choices=("consistent", "strong"), default=None)
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("model", help="build or check intersection models")
    p.add_argument("graph", nargs="?", help="graph file")
    p.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    p.add_argument("--cert", help="certificate JSON file")
    p.add_argument("--build", choices=("m1", "m2", "m3", "m4", "vpg3"))
    p.add_argument("--independent", action="store_true")
    p.add_argument("--load", help="model JSON file instead of building")
    p.add_argument("--check", action="store_true", help="print predicate report")
    p.add_argument("--svg", help="write an SVG rendering to this path")
    p.add_argument("--out", help="write model JSON here instead of stdout")
    p.set_defaults(fn=cmd_model)

    p = sub.add_parser("pattern", help="pattern occurrence and class membership")
    p.add_argument("graph", nargs="?", help="graph file")
    p.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    p.add_argument("--family", help="family such as P6789, R12, or comma list")
    p.add_argument("--order", help="check occurrence against this order")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--list", action="store_true", help="print the builtin catalog")
    p.set_defaults(fn=cmd_pattern)

    p = sub.add_parser("bounds", help="bandwidth, pathwidth, peak, diameter")
    add_graph_arg(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("gallery", help="emit a named fixture")
    p.add_argument("name", nargs="?", default="")
    p.add_argument("--json", action="store_true")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_gallery)

    p = sub.add_parser("sweep", help="run a cross-check sweep")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--orders", type=int, default=None)
    p.set_defaults(fn=cmd_sweep)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
