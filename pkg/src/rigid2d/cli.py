"""Command-line interface.

One executable with subcommands; data goes to stdout, diagnostics and
census summaries to stderr, so pipelines compose.  Exit codes: 0 on
success, 1 on usage errors (bad flags, unknown generators, violated
preconditions), 2 on malformed input data.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable, Sequence

from . import census, classify, rigidity, symmetry
from .classify import ClassificationReport
from .errors import CorpusError, EdgeListError, Graph6Error, PreconditionError
from .generators import catalog_names, generate
from .graph import Graph, parse_edge_list
from .graph6 import from_graph6, to_graph6
from .oracle import PRIME, oracle_is_rigid, random_realization, rigidity_matrix_rank

USAGE_ERROR = 1
DATA_ERROR = 2

SEED_ENV_VAR = "RIGID2D_SEED"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _default_seed() -> int:
    try:
        return int(os.environ.get(SEED_ENV_VAR, "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rigid2d",
        description="Generic rigidity and global rigidity of graphs in the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", metavar="PATH", help="read the graph from a file")
        p.add_argument(
            "--generate",
            metavar="NAME[,PARAMS]",
            help=f"build a catalog graph ({', '.join(catalog_names())})",
        )
        p.add_argument(
            "--stdin", action="store_true", help="read the graph from standard input"
        )

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("text", "tsv"), default="text", help="output format"
        )

    p = sub.add_parser("decide", help="general global-rigidity decision")
    add_source(p)
    add_format(p)

    p = sub.add_parser("classify", help="family fast-path classification")
    add_source(p)
    add_format(p)
    p.add_argument(
        "--family",
        choices=("auto", "vertex-transitive", "edge-transitive", "distance-regular"),
        default="auto",
        help="which fast path to apply (auto tries all that hold)",
    )

    p = sub.add_parser("components", help="maximal rigid components and rank")
    add_source(p)
    add_format(p)

    p = sub.add_parser("symmetry", help="automorphism group and symmetry flags")
    add_source(p)
    add_format(p)

    p = sub.add_parser("generate", help="emit a catalog graph as graph6")
    p.add_argument("name", metavar="NAME[,PARAMS]")
    add_format(p)

    p = sub.add_parser("census", help="theorem-parity census (TSV to stdout)")
    p.add_argument("--max-n", type=int, metavar="N", help="built-in census over n=1..N")
    p.add_argument("--input", metavar="PATH", help="graph6 corpus file")
    p.add_argument("--stdin", action="store_true", help="graph6 corpus on stdin")
    p.add_argument(
        "--strict", action="store_true", help="abort on the first malformed line"
    )

    p = sub.add_parser("oracle", help="pebble rank versus prime-field matrix rank")
    add_source(p)
    add_format(p)
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"realization seed (default: ${SEED_ENV_VAR} or 0)",
    )
    return parser


def _parse_generate_spec(spec: str) -> Graph:
    name, _, rest = spec.partition(",")
    params = []
    for token in rest.split(",") if rest else []:
        try:
            params.append(int(token))
        except ValueError:
            raise ValueError(f"parameter {token!r} is not an integer") from None
    return generate(name, *params)


def _load_graph(args: argparse.Namespace) -> Graph:
    sources = [
        name
        for name, used in (
            ("--input", args.input is not None),
            ("--generate", getattr(args, "generate", None) is not None),
            ("--stdin", args.stdin),
        )
        if used
    ]
    if len(sources) != 1:
        raise _UsageError(
            f"exactly one input source required, got {', '.join(sources) or 'none'}"
        )
    if getattr(args, "generate", None) is not None:
        return _parse_generate_spec(args.generate)
    if args.stdin:
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="ascii") as handle:
            text = handle.read()
    return _graph_from_text(text)


def _graph_from_text(text: str) -> Graph:
    """Single-graph input: edge-list when the first line is 'n m', else the
    first nonblank line as graph6."""
    stripped = [line for line in text.splitlines() if line.strip()]
    if not stripped:
        raise Graph6Error("empty input", 0)
    first = stripped[0].split()
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return parse_edge_list(text)
    return from_graph6(stripped[0])


def _bool(value: bool) -> str:
    return "true" if value else "false"


def render_report(
    report: ClassificationReport, fmt: str = "text", graph: Graph | None = None
) -> str:
    """Stable text or TSV rendering of a classification report.

    TSV rows follow the census schema, which includes symmetry flags not
    stored on the report; they are recomputed from ``graph`` (or from the
    report's graph6 key when no graph is passed).
    """
    if fmt == "tsv":
        g = graph if graph is not None else from_graph6(report.graph6)
        lines = ["\t".join(census.TSV_COLUMNS)]
        lines.append(census.record_to_tsv(census.census_record(g)))
        return "\n".join(lines) + "\n"
    suffix = ""
    if report.route == classify.ROUTE_DISTANCE_REGULAR:
        suffix = f" (k={report.min_degree})"
    elif report.route == classify.ROUTE_VERTEX_TRANSITIVE:
        suffix = f" (k={report.min_degree}, clique={report.clique}, n={report.n})"
    elif report.route == classify.ROUTE_EDGE_TRANSITIVE:
        suffix = f" (delta={report.min_degree}, Delta={report.max_degree})"
    lines = [
        f"graph6: {report.graph6}",
        f"n: {report.n}",
        f"m: {report.m}",
        f"min degree: {report.min_degree}",
        f"max degree: {report.max_degree}",
        f"rigid: {_bool(report.rigid)}",
        f"redundantly rigid: {_bool(report.redundantly_rigid)}",
        f"3-connected: {_bool(report.three_connected)}",
        f"globally rigid: {_bool(report.globally_rigid)}{suffix}",
        f"route: {report.route}",
    ]
    if report.matched_graph:
        lines.append(f"matched special graph: {report.matched_graph}")
    if report.separator is not None:
        lines.append("separator witness: " + " ".join(map(str, report.separator)))
    if report.non_redundant_edge is not None:
        lines.append(f"non-redundant edge witness: {report.non_redundant_edge}")
    if report.note:
        lines.append(f"note: {report.note}")
    return "\n".join(lines) + "\n"


def _cmd_decide(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    report = classify.decide_global_rigidity(g)
    sys.stdout.write(render_report(report, args.format, g))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    routes = {
        "vertex-transitive": classify.classify_vertex_transitive,
        "edge-transitive": classify.classify_edge_transitive,
        "distance-regular": classify.classify_distance_regular,
    }
    if args.family != "auto":
        report = routes[args.family](g)
        sys.stdout.write(render_report(report, args.format, g))
        return 0
    reports = []
    for route in routes.values():
        try:
            reports.append(route(g))
        except PreconditionError:
            continue
    if not reports:
        sys.stderr.write("no family predicate holds; falling back to general\n")
        report = classify.decide_global_rigidity(g)
        sys.stdout.write(render_report(report, args.format, g))
        return 0
    if args.format == "tsv":
        sys.stdout.write(render_report(reports[0], "tsv", g))
    else:
        sys.stdout.write("".join(render_report(r, "text", g) for r in reports))
    return 0


def _cmd_components(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    decomp = rigidity.rigid_components(g)
    if args.format == "tsv":
        lines = ["component\tsize\tvertices"]
        for i, comp in enumerate(decomp.components):
            lines.append(f"{i}\t{len(comp)}\t" + ",".join(map(str, sorted(comp))))
        lines.append(f"rank\t{decomp.rank}\t")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        lines = [f"rank: {decomp.rank}", f"components: {len(decomp.components)}"]
        for i, comp in enumerate(decomp.components):
            lines.append(f"component {i}: " + " ".join(map(str, sorted(comp))))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_symmetry(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    rep = symmetry.symmetry_report(g)
    arr = symmetry.is_distance_regular(g) if g.is_connected() else None
    dr = _bool(arr is not None)
    if args.format == "tsv":
        header = (
            "n\tm\taut_order\tvertex_orbits\tedge_orbits\tvt\tet\tdr"
            "\tintersection_array"
        )
        row = "\t".join(
            map(
                str,
                (
                    g.n,
                    g.m,
                    rep.aut_order,
                    len(rep.vertex_orbits),
                    len(rep.edge_orbits),
                    _bool(rep.vertex_transitive),
                    _bool(rep.edge_transitive),
                    dr,
                    str(arr) if arr else "",
                ),
            )
        )
        sys.stdout.write(header + "\n" + row + "\n")
    else:
        lines = [
            f"n: {g.n}",
            f"m: {g.m}",
            f"automorphism group order: {rep.aut_order}",
            f"generators: {len(rep.generators)}",
            f"vertex orbits: {len(rep.vertex_orbits)}",
            f"edge orbits: {len(rep.edge_orbits)}",
            f"vertex-transitive: {_bool(rep.vertex_transitive)}",
            f"edge-transitive: {_bool(rep.edge_transitive)}",
            f"distance-regular: {dr}",
        ]
        if arr is not None:
            lines.append(f"intersection array: {arr}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    g = _parse_generate_spec(args.name)
    if args.format == "tsv":
        sys.stdout.write("graph6\tn\tm\n")
        sys.stdout.write(f"{to_graph6(g)}\t{g.n}\t{g.m}\n")
    else:
        sys.stdout.write(to_graph6(g) + "\n")
    return 0


def _census_graphs(args: argparse.Namespace) -> Iterable[Graph]:
    picked = [
        name
        for name, used in (
            ("--max-n", args.max_n is not None),
            ("--input", args.input is not None),
            ("--stdin", args.stdin),
        )
        if used
    ]
    if len(picked) != 1:
        raise _UsageError(
            "census needs exactly one of --max-n, --input, --stdin; got "
            + (", ".join(picked) or "none")
        )
    if args.max_n is not None:
        if not 1 <= args.max_n <= census.MAX_BUILTIN_N:
            raise _UsageError(f"--max-n must be between 1 and {census.MAX_BUILTIN_N}")

        def builtin() -> Iterable[Graph]:
            for n in range(1, args.max_n + 1):
                yield from census.enumerate_connected(n)

        return builtin()
    if args.stdin:
        lines: Iterable[str] = sys.stdin
    else:
        with open(args.input, "r", encoding="ascii") as handle:
            lines = handle.read().splitlines()

    def report(lineno: int, exc: Graph6Error) -> None:
        print(f"line {lineno}: skipped: {exc}", file=sys.stderr)

    return census.ingest_graph6_stream(lines, strict=args.strict, on_error=report)


def _cmd_census(args: argparse.Namespace) -> int:
    graphs = _census_graphs(args)
    sys.stdout.write("\t".join(census.TSV_COLUMNS) + "\n")
    collected = []
    for rec in census.parity_records(graphs):
        collected.append(rec)
        sys.stdout.write(census.record_to_tsv(rec) + "\n")
    summary = census.ParitySummary.collect(collected)
    sys.stderr.write(
        "census: {total} graphs | vertex-transitive {vt} | edge-transitive {et} "
        "| distance-regular {dr} | globally rigid {gr} | mismatches {mm}\n".format(
            total=summary.total,
            vt=summary.vertex_transitive,
            et=summary.edge_transitive,
            dr=summary.distance_regular,
            gr=summary.globally_rigid,
            mm=len(summary.mismatches),
        )
    )
    for graph6, family, fast, general in summary.mismatches:
        sys.stderr.write(
            f"mismatch: {graph6} {family} fastpath={_bool(fast)} "
            f"general={_bool(general)}\n"
        )
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    seed = args.seed if args.seed is not None else _default_seed()
    pebble = rigidity.rank(g)
    matrix = rigidity_matrix_rank(g, random_realization(g, seed))
    agree = pebble == matrix
    rigid = oracle_is_rigid(g, seed) if g.n >= 2 else True
    if args.format == "tsv":
        sys.stdout.write("seed\tpebble_rank\tmatrix_rank\tagree\trigid\n")
        sys.stdout.write(f"{seed}\t{pebble}\t{matrix}\t{_bool(agree)}\t{_bool(rigid)}\n")
    else:
        sys.stdout.write(
            "\n".join(
                (
                    f"seed: {seed}",
                    f"prime modulus: {PRIME}",
                    f"pebble rank: {pebble}",
                    f"matrix rank: {matrix}",
                    f"agree: {_bool(agree)}",
                    f"rigid: {_bool(rigid)}",
                )
            )
            + "\n"
        )
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "classify": _cmd_classify,
    "components": _cmd_components,
    "symmetry": _cmd_symmetry,
    "generate": _cmd_generate,
    "census": _cmd_census,
    "oracle": _cmd_oracle,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (Graph6Error, EdgeListError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def run() -> None:
    raise SystemExit(main())
