"""Command-line interface.

Every pipeline is exposed as a subcommand: tree and forest weights of
graph files, link determinants and Tait graphs of PD files, tangle
closures, the gcd obstruction verdict, and the randomized self-test
suites.  All numeric output is full decimal; identical invocations with
identical seeds produce byte-identical output.

Exit codes: 0 success (for ``krebes``: consistent), 1 obstructed verdict
or self-test failure, 2 input or format errors, 3 method disagreement
(a bug trap).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import laplacian as _laplacian
from .composition import CompositionError, gcd_list
from .diagram import (
    DiagramError,
    PDSyntaxError,
    TangleSizeError,
    closure_determinants,
    krebes_check,
    link_determinant,
    parse_pd,
    parse_tangle,
    tait_graph,
)
from .graph import (
    GraphError,
    RootSpec,
    forest_weight_enum,
    graph_from_json_dict,
    graph_to_json_dict,
    tree_weight_enum,
)
from .laplacian import MatrixError
from .selftest import DEFAULT_SEED, run_selftest

_EPILOG = """\
file formats:
  graph files are JSON: {"vertices": [1, 2], "edges": [{"u": 1, "v": 2, "w": -1}]};
  parallel edges are repeated entries, weights are any integers.

  PD files are UTF-8 text, one statement per line:
    X a b c d   a crossing; arc labels counterclockwise from the incoming
                understrand (labels a and c carry the understrand)
    L k         k crossingless free loops
    B p1 ... p2n  tangle boundary, clockwise from the top-left endpoint
                  (tangle files only, exactly one B line)
    # comment   blank lines are ignored

conventions:
  crossing sign: +1 when rotating the understrand counterclockwise onto the
  overstrand sweeps through the shaded quadrants, -1 otherwise.  The
  unbounded face (always unshaded) is the face with the most corners, ties
  to the lowest face id; override with --outer-arc.  Determinants do not
  depend on either choice.

  the default selftest seed is 1729; identical seeds give identical runs.
"""


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str):
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: invalid JSON ({exc})")
    return graph_from_json_dict(data)


def _parse_labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise GraphError(f"expected a comma-separated list of integers, got {text!r}")


def cmd_tree_weight(args) -> int:
    graph = _load_graph(args.graph)
    if args.both:
        by_enum = tree_weight_enum(graph)
        by_mtt = _laplacian.tree_weight_mtt(graph)
        print(f"enum: {by_enum}")
        print(f"mtt: {by_mtt}")
        if by_enum != by_mtt:
            print("agreement: MISMATCH")
            return 3
        print("agreement: ok")
        return 0
    if args.method == "enum":
        print(tree_weight_enum(graph))
    else:
        print(_laplacian.tree_weight_mtt(graph))
    return 0


def cmd_forest_weight(args) -> int:
    graph = _load_graph(args.graph)
    gamma = _parse_labels(args.gamma)
    if not gamma:
        raise GraphError("--gamma must name at least one vertex")
    gamma_prime = _parse_labels(args.gamma_prime) if args.gamma_prime else gamma
    roots = RootSpec(gamma, gamma_prime)
    weight = forest_weight_enum(graph, roots)
    print(weight)
    if roots.is_principal:
        by_minor = _laplacian.rooted_forest_weight_mtt(graph, gamma)
        if by_minor != weight:
            print(f"minor: {by_minor} MISMATCH")
            return 3
        print(f"minor: {by_minor} ok")
    return 0


def cmd_det(args) -> int:
    code = parse_pd(_read(args.pd))
    print(link_determinant(code, dual=args.dual))
    return 0


def cmd_tait(args) -> int:
    code = parse_pd(_read(args.pd))
    tait = tait_graph(code, dual=args.dual, outer_arc=args.outer_arc)
    graph = tait.graph
    print(f"vertices: {len(graph.vertices)} edges: {len(graph.edges)}")
    lap = _laplacian.laplacian_matrix(graph)
    print(" ".join(str(v) for v in lap.row_labels))
    for row in lap.to_rows():
        print(" ".join(str(x) for x in row))
    if args.out:
        Path(args.out).write_text(
            json.dumps(graph_to_json_dict(graph), indent=1) + "\n", encoding="utf-8"
        )
        print(f"wrote {args.out}")
    return 0


def cmd_closures(args) -> int:
    tangle = parse_tangle(_read(args.tangle))
    rows = closure_determinants(tangle)
    for pattern, det in rows:
        print(f"{pattern}  {det}")
    print(f"gcd: {gcd_list([det for _, det in rows])}")
    return 0


def cmd_krebes(args) -> int:
    tangle = parse_tangle(_read(args.tangle))
    link = parse_pd(_read(args.link))
    if tangle.n not in (2, 3):
        rows = closure_determinants(tangle)
        print("closures: " + " ".join(str(det) for _, det in rows))
        print(f"gcd: {gcd_list([det for _, det in rows])}")
        print(f"link: {link_determinant(link)}")
        print("verdict: gcd computed, theorem not asserted by this tool")
        return 2
    verdict = krebes_check(tangle, link)
    print("closures: " + " ".join(str(d) for d in verdict.closure_determinants))
    print(f"gcd: {verdict.gcd}")
    print(f"link: {verdict.link_determinant}")
    print(f"verdict: {verdict.conclusion}")
    return 0 if verdict.conclusion == "consistent" else 1


def cmd_selftest(args) -> int:
    outcomes = run_selftest(args.iterations, args.seed)
    failed = False
    for outcome in outcomes:
        passed = outcome.iterations - len(outcome.failures)
        print(f"{outcome.name}: {passed}/{outcome.iterations} ok")
        for iteration, record in outcome.failures:
            failed = True
            print(f"  iteration {iteration}: {record.description}")
            dump_dir = Path(args.dump_dir) / f"{outcome.name}-{iteration}"
            dump_dir.mkdir(parents=True, exist_ok=True)
            for name, content in record.files.items():
                (dump_dir / name).write_text(content, encoding="utf-8")
            if record.files:
                print(f"  dumped to {dump_dir}")
    print("selftest: FAIL" if failed else "selftest: PASS")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestlink",
        description="spanning-forest weights, link determinants, and tangle obstructions",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "tree-weight", aliases=["tree_weight"], help="tree weight of a graph file"
    )
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--method", choices=("enum", "mtt"), default="mtt")
    p.add_argument("--both", action="store_true", help="run both methods and compare")
    p.set_defaults(handler=cmd_tree_weight)

    p = sub.add_parser(
        "forest-weight", aliases=["forest_weight"], help="forest weight for given root sets"
    )
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--gamma", required=True, help="comma-separated vertex labels")
    p.add_argument("--gamma-prime", default=None, help="defaults to --gamma")
    p.set_defaults(handler=cmd_forest_weight)

    p = sub.add_parser("det", help="link determinant of a PD file")
    p.add_argument("pd", help="PD file")
    p.add_argument("--dual", action="store_true", help="use the unshaded-face Tait graph")
    p.set_defaults(handler=cmd_det)

    p = sub.add_parser("tait", help="Tait graph and Goeritz matrix of a PD file")
    p.add_argument("pd", help="PD file")
    p.add_argument("--out", default=None, help="write the graph JSON here")
    p.add_argument("--dual", action="store_true", help="use the unshaded faces")
    p.add_argument("--outer-arc", type=int, default=None, help="an arc on the unbounded face")
    p.set_defaults(handler=cmd_tait)

    p = sub.add_parser("closures", help="determinants of all closures of a tangle")
    p.add_argument("tangle", help="tangle file (PD statements plus one B line)")
    p.set_defaults(handler=cmd_closures)

    p = sub.add_parser("krebes", help="gcd-divisibility obstruction verdict")
    p.add_argument("--tangle", required=True, help="tangle file")
    p.add_argument("--link", required=True, help="link PD file")
    p.set_defaults(handler=cmd_krebes)

    p = sub.add_parser("selftest", help="randomized property suites")
    p.add_argument("--iterations", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--dump-dir", default="selftest_failures")
    p.set_defaults(handler=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (
        GraphError,
        MatrixError,
        CompositionError,
        DiagramError,
        PDSyntaxError,
        TangleSizeError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
