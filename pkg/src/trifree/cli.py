"""Command-line front end.

Every subcommand emits one JSON report with sorted keys; timings are opt-in
(--timings) so identical invocations produce byte-identical output.  Exit
codes: 0 success / property holds, 1 property fails or a counterexample was
found (the report still carries the details), 2 usage errors, 3 malformed
input or violated preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .families import (
    AndrasfaiId,
    UnavailableMapError,
    andrasfai,
    cayley_6k,
    cube,
    extremal_formula,
    fig41,
    graph_n,
    haggkvist_spec,
    mycielski_grotzsch,
    vega,
)
from .formats import (
    FormatError,
    graph_payload,
    parse_graph,
    write_dot,
    write_graph,
    write_graph6,
)
from .graph import BlowupSpec, ConstructionError, Graph, blowup
from .properties import (
    check_d,
    check_q,
    degree_profile,
    independence_number,
    is_maximal_triangle_free,
    is_triangle_free,
)
from .recognition import RecognitionCertificate, recognize
from .search import CensusError, ResourceGuardError, census, hunt_conjecture, search_extremal
from .verify import check_names, run_all, run_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

ADVISORY_CHECKS = frozenset({"automorphisms"})


def _version() -> str:
    try:
        from importlib.metadata import version

        return version("trifree")
    except Exception:
        return "0.1.0"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii") as handle:
        handle.write(text)


def _input_graph(args) -> Graph:
    return parse_graph(_read_text(args.infile), args.format)


def _emit(args, command: str, payload: dict, started: float) -> None:
    report = {"command": command, "version": _version()}
    report.update(payload)
    if getattr(args, "timings", False):
        report["elapsed"] = round(time.perf_counter() - started, 3)
    _write_text(args.out, json.dumps(report, indent=2, sort_keys=True) + "\n")


def _family_payload(family) -> dict:
    if isinstance(family, AndrasfaiId):
        return {"kind": "andrasfai", "k": family.k}
    return {"kind": "vega", "i": family.i, "mu": family.mu, "nu": family.nu}


def _weights_payload(w) -> Optional[list]:
    return None if w is None else list(w.weights)


# -- gen -------------------------------------------------------------------


def _range_labels(prefix_groups) -> dict[int, str]:
    labels = {}
    position = 0
    for prefix, count in prefix_groups:
        for index in range(count):
            labels[position] = f"{prefix}{index + 1}" if count > 1 else prefix
            position += 1
    return labels


def _build_family(args) -> tuple[Graph, Optional[dict[int, str]]]:
    family = args.family
    if family == "andrasfai":
        if args.k is None:
            raise ValueError("gen andrasfai requires --k")
        return andrasfai(args.k), None
    if family == "vega":
        if args.i is None:
            raise ValueError("gen vega requires --i (and optionally --mu/--nu)")
        g, labeling = vega(args.i, args.mu, args.nu)
        return g, labeling.names()
    if family == "mycielski":
        g, labeling = mycielski_grotzsch()
        labels = {p: f"a{j}" for j, p in enumerate(labeling.a)}
        labels.update({p: f"b{j}" for j, p in enumerate(labeling.b)})
        labels[labeling.c] = "c"
        return g, labels
    if family == "cube":
        return cube(), None
    if family == "graph-n":
        return graph_n(), _range_labels([("a", 3), ("b", 3), ("c", 3)])
    if family == "cayley":
        if args.k is None:
            raise ValueError("gen cayley requires --k")
        return cayley_6k(args.k), None
    if family == "fig41":
        return fig41(), _range_labels([("a", 8), ("b", 4)])
    if family == "haggkvist":
        return blowup(haggkvist_spec()), None
    if family == "blowup":
        if args.weights is None:
            raise ValueError("gen blowup requires --weights")
        base = _input_graph(args)
        weights = tuple(int(part) for part in args.weights.split(","))
        return blowup(BlowupSpec(base, weights)), None
    raise ValueError(f"unknown family {family!r}")


def _cmd_gen(args) -> int:
    g, labels = _build_family(args)
    if args.dot:
        _write_text(args.out, write_dot(g, labels, name=args.family.replace("-", "_")))
    else:
        _write_text(args.out, write_graph(g, args.format))
    return EXIT_OK


# -- check -----------------------------------------------------------------


def _cmd_check(args) -> int:
    started = time.perf_counter()
    g = _input_graph(args)
    payload: dict = {"graph": graph_payload(g)}
    code = EXIT_OK
    if args.tf:
        ok, triangle = is_triangle_free(g)
        payload["property"] = "triangle_free"
        payload["verdict"] = {"holds": ok, "triangle": list(triangle) if triangle else None}
        code = EXIT_OK if ok else EXIT_FAIL
    elif args.maximal:
        result = is_maximal_triangle_free(g)
        payload["property"] = "maximal_triangle_free"
        payload["verdict"] = {
            "holds": result.holds,
            "triangle": list(result.triangle) if result.triangle else None,
            "missing_pair": list(result.missing_pair) if result.missing_pair else None,
        }
        code = EXIT_OK if result.holds else EXIT_FAIL
    elif args.alpha:
        value, members = independence_number(g)
        profile = degree_profile(g)
        payload["property"] = "independence_number"
        payload["verdict"] = {
            "alpha": value,
            "maximum_independent_set": list(members),
            "min_degree": profile.min_degree,
            "max_degree": profile.max_degree,
        }
    else:
        level = args.d if args.d is not None else args.q
        checker = check_d if args.d is not None else check_q
        verdict = checker(g, level)
        payload["property"] = "covering" if args.d is not None else "covering_with_certificates"
        payload["verdict"] = {
            "holds": verdict.holds,
            "level": verdict.level,
            "witness": _weights_payload(verdict.witness),
        }
        code = EXIT_OK if verdict.holds else EXIT_FAIL
    _emit(args, "check", payload, started)
    return code


# -- recognize ---------------------------------------------------------------


def _cmd_recognize(args) -> int:
    started = time.perf_counter()
    g = _input_graph(args)
    outcome = recognize(g)
    payload: dict = {"graph": graph_payload(g)}
    if isinstance(outcome, RecognitionCertificate):
        payload["certificate"] = {
            "family": _family_payload(outcome.family),
            "class_map": list(outcome.class_map),
            "weights": list(outcome.weights),
        }
        code = EXIT_OK
    else:
        payload["refutation"] = {
            "kind": outcome.kind,
            "triangle": list(outcome.triangle) if outcome.triangle else None,
            "missing_pair": list(outcome.missing_pair) if outcome.missing_pair else None,
            "level": outcome.level,
            "witness": _weights_payload(outcome.witness),
            "details": outcome.details,
        }
        code = EXIT_FAIL
    _emit(args, "recognize", payload, started)
    return code


# -- census / hunt -----------------------------------------------------------


def _row_payload(row) -> dict:
    return {
        "order": row.order,
        "graph6": write_graph6(row.graph),
        "d2": row.d2,
        "d3": row.d3,
        "d4": row.d4,
        "q4": row.q4,
        "recognized": _family_payload(row.recognized) if row.recognized else None,
        "induced_c6": row.induced_c6,
        "contains_upsilon": row.contains_upsilon,
    }


def _cmd_census(args) -> int:
    started = time.perf_counter()
    try:
        rows = census(args.n, strict=args.assert_, allow_large=args.allow_large,
                      jobs=args.jobs)
    except CensusError as exc:
        _emit(args, "census", {
            "n": args.n,
            "violation": {
                "invariant": exc.violation.invariant,
                "row": _row_payload(exc.violation.row),
            },
        }, started)
        return EXIT_FAIL
    _emit(args, "census", {
        "n": args.n,
        "count": len(rows),
        "rows": [_row_payload(row) for row in rows],
    }, started)
    return EXIT_OK


def _cmd_hunt(args) -> int:
    started = time.perf_counter()
    hits = hunt_conjecture(args.max_n, allow_large=args.allow_large)
    _emit(args, "hunt", {
        "max_n": args.max_n,
        "counterexamples": [write_graph6(g) for g in hits],
    }, started)
    return EXIT_OK if not hits else EXIT_FAIL


# -- paper-verify -------------------------------------------------------------


def _report_payload(report) -> dict:
    return {
        "name": report.name,
        "parameters": report.parameters,
        "passed": report.passed,
        "seed": report.seed,
        "counterexample": report.counterexample,
        "details": report.details,
    }


def _cmd_paper_verify(args) -> int:
    started = time.perf_counter()
    if args.check == "all":
        reports = run_all(jobs=args.jobs)
    else:
        reports = [run_check(args.check)]
    failed = [r.name for r in reports if not r.passed]
    advisory = [] if args.strict_automorphisms else [
        name for name in failed if name in ADVISORY_CHECKS
    ]
    fatal = [name for name in failed if name not in advisory]
    _emit(args, "paper-verify", {
        "checks": [_report_payload(r) for r in reports],
        "failed": failed,
        "advisory_only": advisory,
    }, started)
    return EXIT_FAIL if fatal else EXIT_OK


# -- extremal ------------------------------------------------------------------


def _cmd_extremal(args) -> int:
    started = time.perf_counter()
    value = extremal_formula(args.n, args.s)
    payload: dict = {"n": args.n, "s": args.s, "formula_value": value}
    code = EXIT_OK
    if args.search:
        result = search_extremal(args.n, args.s, max_order=args.max_order)
        payload["search"] = {
            "k": result.k,
            "best_found": result.best_found,
            "witnesses": [
                {"template_graph6": write_graph6(spec.base), "weights": list(spec.weights)}
                for spec in result.witnesses
            ],
        }
        if result.best_found != value:
            code = EXIT_FAIL
    _emit(args, "extremal", payload, started)
    return code


# -- parser --------------------------------------------------------------------


def _add_io(parser, graph_input: bool) -> None:
    if graph_input:
        parser.add_argument("--in", dest="infile", default="-", metavar="PATH",
                            help="input graph file, '-' for stdin (default)")
    parser.add_argument("--format", choices=("elist", "graph6"), default="elist",
                        help="graph text format (default elist)")
    parser.add_argument("--out", default="-", metavar="PATH",
                        help="output file, '-' for stdout (default)")
    parser.add_argument("--timings", action="store_true",
                        help="include elapsed seconds in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree",
        description="Generators, covering-property checks, blow-up recognition "
                    "and exhaustive small-order verification for maximal "
                    "triangle-free graphs.",
    )
    parser.add_argument("--version", action="version", version=f"trifree {_version()}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named family member")
    p.add_argument("family", choices=(
        "andrasfai", "vega", "mycielski", "cube", "graph-n", "cayley",
        "fig41", "haggkvist", "blowup"))
    p.add_argument("--k", type=int, help="index for andrasfai/cayley")
    p.add_argument("--i", type=int, help="inner index for vega")
    p.add_argument("--mu", type=int, default=0, choices=(0, 1))
    p.add_argument("--nu", type=int, default=0, choices=(0, 1))
    p.add_argument("--weights", help="comma-separated blow-up weights (gen blowup)")
    p.add_argument("--in", dest="infile", default="-", metavar="PATH",
                   help="template graph for gen blowup")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a graph file")
    p.add_argument("--format", choices=("elist", "graph6"), default="elist")
    p.add_argument("--out", default="-", metavar="PATH")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("check", help="decide a property of an input graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tf", action="store_true", help="triangle-freeness")
    group.add_argument("--maximal", action="store_true", help="maximal triangle-freeness")
    group.add_argument("--alpha", action="store_true", help="independence number")
    group.add_argument("--d", type=int, metavar="K", help="weighted covering property at level K")
    group.add_argument("--q", type=int, metavar="K",
                       help="certificate variant of the covering property")
    _add_io(p, graph_input=True)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("recognize", help="certify an input as a template blow-up")
    _add_io(p, graph_input=True)
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("census", help="classify all maximal triangle-free graphs of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="fail (exit 1) on any classification-invariant violation")
    p.add_argument("--allow-large", action="store_true",
                   help="lift the order guard (slow)")
    p.add_argument("--jobs", type=int, default=1)
    _add_io(p, graph_input=False)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("hunt", help="search small orders for covering-property counterexamples")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    _add_io(p, graph_input=False)
    p.set_defaults(handler=_cmd_hunt)

    p = sub.add_parser("paper-verify", help="run the registered lemma checks")
    p.add_argument("--check", default="all", choices=("all", *check_names()))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict-automorphisms", action="store_true",
                   help="treat automorphism-group mismatches as fatal")
    _add_io(p, graph_input=False)
    p.set_defaults(handler=_cmd_paper_verify)

    p = sub.add_parser("extremal", help="edge-maximum blow-ups at bounded independence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--search", action="store_true",
                   help="also search template blow-ups for attaining weightings")
    p.add_argument("--max-order", type=int, default=30,
                   help="largest template order considered in the search")
    _add_io(p, graph_input=False)
    p.set_defaults(handler=_cmd_extremal)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (FormatError, ConstructionError, ResourceGuardError,
            UnavailableMapError, ValueError, OSError) as exc:
        print(f"trifree: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
