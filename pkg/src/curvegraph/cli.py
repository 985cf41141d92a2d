"""Command-line surface.

Subcommands read a graph or chain from a file argument or standard input
("-"), with the payload kind detected from its top-level JSON keys; chains
are turned into path graphs wherever a graph is expected, so generator
output pipes straight into the analysis commands. All rationals in output
are exact "p/q" strings and the output is byte-stable for fixed inputs.

Exit codes: 0 success, 1 domain error (a JSON error object goes to the
error stream), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from typing import Tuple, Union

from .chains import (
    BirthDeathChain,
    associated_bdc,
    bdc_as_graph,
    chain_from_json_dict,
    chain_to_json,
    make_example_gprime,
    make_figure1,
    make_mirror_model,
    make_ollivier_matching_chain,
    make_unweighted_chain,
)
from .comparison import (
    asymptotic_constant,
    stronger_average_growth,
    stronger_curvature_growth,
    stronger_outside_finite,
    volume_comparison,
)
from .curvature import (
    OllivierResult,
    bdc_ollivier_closed_form,
    curvature_profile,
    ollivier_pair,
    sphere_curvature,
)
from .errors import CurvegraphError, FormatError
from .graphs import (
    WeightedGraph,
    format_rational,
    graph_from_json_dict,
    graph_to_json,
    loads_json,
    parse_rational,
    rooted_decomposition,
)
from .verify import run_verification

Payload = Tuple[str, Union[WeightedGraph, BirthDeathChain]]


def _read_source(source: str) -> Tuple[str, str]:
    if source == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        with open(source, "r", encoding="utf-8") as handle:
            return handle.read(), source
    except OSError as exc:
        raise FormatError(
            f"cannot read {source}: {exc.strerror or exc}", path=source
        ) from exc


def _load_payload(source: str) -> Payload:
    text, name = _read_source(source)
    data = loads_json(text, name)
    if isinstance(data, dict) and "vertices" in data and "edges" in data:
        return "graph", graph_from_json_dict(data)
    if isinstance(data, dict) and "m" in data and "b" in data:
        return "chain", chain_from_json_dict(data)
    raise FormatError(
        f"{name}: cannot tell a graph from a chain; expected keys "
        "vertices/edges or m/b",
        path=name,
    )


def _load_graph(source: str) -> WeightedGraph:
    kind, obj = _load_payload(source)
    return bdc_as_graph(obj) if kind == "chain" else obj


def _resolve_vertex(g: WeightedGraph, token: str):
    if token in g.adjacency:
        return token
    if re.fullmatch(r"\d+", token):
        number = int(token)
        if number in g.adjacency:
            return number
    return token


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _pair(text: str) -> Tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated vertex ids, got {text!r}"
        )
    return parts[0], parts[1]


def _write_csv(rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerows(rows)


def _ollivier_json_dict(result: OllivierResult) -> dict:
    return {
        "x": str(result.x),
        "y": str(result.y),
        "distance": result.distance,
        "value": format_rational(result.value),
        "witness": {str(v): result.witness[v] for v in result.support},
        "support": [str(v) for v in result.support],
    }


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_validate(args) -> int:
    kind, obj = _load_payload(args.file)
    if kind == "graph":
        sys.stdout.write(graph_to_json(obj))
    else:
        sys.stdout.write(chain_to_json(obj))
    return 0


def _cmd_curvature(args) -> int:
    g = _load_graph(args.file)
    root = _resolve_vertex(g, args.root)
    decomp = rooted_decomposition(g, root)
    profile = curvature_profile(g, decomp)
    if args.radius is not None:
        decomp.sphere(args.radius)  # range check
        radii = [args.radius]
    else:
        radii = list(range(decomp.horizon + 1))
    rows = [["r", "vertex", "k_minus", "k_plus", "avg_minus", "avg_plus", "m_Sr"]]
    for r in radii:
        summary = profile.per_radius[r]
        avg_plus = "" if summary.avg_outer is None else format_rational(summary.avg_outer)
        for v in decomp.sphere(r):
            k_minus, k_plus = profile.per_vertex[v]
            rows.append(
                [
                    str(r),
                    str(v),
                    format_rational(k_minus),
                    "" if k_plus is None else format_rational(k_plus),
                    format_rational(summary.avg_inner),
                    avg_plus,
                    format_rational(summary.sphere_volume),
                ]
            )
    _write_csv(rows)
    return 0


def _cmd_ollivier(args) -> int:
    g = _load_graph(args.file)
    if args.all_adjacent:
        results = [
            _ollivier_json_dict(ollivier_pair(g, u, v)) for u, v, _ in g.edges
        ]
        sys.stdout.write(json.dumps(results, indent=2) + "\n")
        return 0
    x = _resolve_vertex(g, args.pair[0])
    y = _resolve_vertex(g, args.pair[1])
    result = ollivier_pair(g, x, y)
    sys.stdout.write(json.dumps(_ollivier_json_dict(result), indent=2) + "\n")
    return 0


def _cmd_sphere_curv(args) -> int:
    g = _load_graph(args.file)
    root = _resolve_vertex(g, args.root)
    decomp = rooted_decomposition(g, root)
    chain = associated_bdc(g, root)
    chain_graph = bdc_as_graph(chain)
    rows = [["r", "k_graph", "k_chain"]]
    for r in range(1, decomp.horizon + 1):
        graph_side = format_rational(sphere_curvature(g, decomp, r))
        if r <= chain.horizon - 1:
            chain_value = bdc_ollivier_closed_form(chain, r - 1, r)
        else:
            # the closed form reads the weight past r; at the horizon the
            # pair curvature of the last two chain points is the same thing
            chain_value = ollivier_pair(chain_graph, r - 1, r).value
        rows.append([str(r), graph_side, format_rational(chain_value)])
    _write_csv(rows)
    return 0


def _cmd_bdc(args) -> int:
    g = _load_graph(args.file)
    root = _resolve_vertex(g, args.root)
    sys.stdout.write(chain_to_json(associated_bdc(g, root)))
    return 0


def _chain_for_mirror(args) -> BirthDeathChain:
    if args.of in ("chain", "gprime"):
        maker = make_unweighted_chain if args.of == "chain" else make_example_gprime
        return maker(args.n)
    kind, obj = _load_payload(args.of)
    if kind != "chain":
        raise FormatError(
            "mirror needs a chain payload; reduce the graph with `bdc` first",
            path=args.of,
        )
    return obj


def _cmd_gen(args) -> int:
    name = args.generator
    if name == "chain":
        sys.stdout.write(chain_to_json(make_unweighted_chain(args.n)))
    elif name == "gprime":
        sys.stdout.write(chain_to_json(make_example_gprime(args.n)))
    elif name == "figure1":
        sys.stdout.write(graph_to_json(make_figure1()))
    elif name == "mirror":
        sys.stdout.write(graph_to_json(make_mirror_model(_chain_for_mirror(args))))
    else:  # ollivier-match, choices enforced by argparse
        if args.seq is None:
            sys.stderr.write("gen ollivier-match: --seq is required\n")
            return 2
        values = [parse_rational(tok.strip()) for tok in args.seq.split(",")]
        sys.stdout.write(chain_to_json(make_ollivier_matching_chain(values)))
    return 0


def _cmd_compare(args) -> int:
    if args.against is not None:
        if args.files:
            sys.stderr.write(
                "compare: positional files and --against are mutually exclusive\n"
            )
            return 2
        g1 = _load_graph(args.against)
        g2 = _load_graph("-")
    else:
        if len(args.files) != 2:
            sys.stderr.write(
                "compare: expected two files, or --against with a piped subject\n"
            )
            return 2
        g1 = _load_graph(args.files[0])
        g2 = _load_graph(args.files[1])
    if args.constant and args.outside is None:
        sys.stderr.write("compare: --constant requires --outside\n")
        return 2
    root1 = _resolve_vertex(g1, args.root1)
    root2 = _resolve_vertex(g2, args.root2)

    per_vertex = stronger_curvature_growth(g1, root1, associated_bdc(g2, root2))
    averaged = stronger_average_growth(g1, root1, g2, root2)
    outside = None
    if args.outside is not None:
        outside = stronger_outside_finite(g1, root1, g2, root2, args.outside)
    volume = volume_comparison(g1, root1, g2, root2)
    constant = report = None
    if args.constant:
        constant, report = asymptotic_constant(g1, root1, g2, root2, args.outside)

    if args.json:
        payload = {
            "stronger_curvature": per_vertex.to_json_dict(),
            "stronger_average_curvature": averaged.to_json_dict(),
            "volume_comparison": volume.to_json_dict(),
        }
        if outside is not None:
            payload["stronger_outside_finite_set"] = outside.to_json_dict()
        if constant is not None:
            payload["constant"] = format_rational(constant)
            payload["asymptotic_comparison"] = report.to_json_dict()
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return 0
    lines = [per_vertex.describe(), averaged.describe()]
    if outside is not None:
        lines.append(outside.describe())
    lines.append("")
    lines.append(volume.to_text())
    if constant is not None:
        lines.append("")
        lines.append(f"constant: C = {format_rational(constant)}")
        lines.append(report.to_text())
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _env_seed() -> int:
    raw = os.environ.get("CURVEGRAPH_SEED", "7")
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"CURVEGRAPH_SEED must be an integer, got {raw!r}")


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    text, ok = run_verification(seed=seed, instances=args.instances)
    sys.stdout.write(text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvegraph",
        description=(
            "Exact curvature and volume-growth analysis of finite weighted "
            "graphs and birth-death chains."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a payload and echo its canonical form")
    p.add_argument("file", nargs="?", default="-", help="graph or chain JSON; - for stdin")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("curvature", help="per-vertex and per-radius curvature CSV")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--root", required=True, help="root vertex id")
    p.add_argument("--radius", type=int, default=None, help="restrict to one radius")
    p.set_defaults(func=_cmd_curvature)

    p = sub.add_parser("ollivier", help="exact pair curvature with an optimal witness")
    p.add_argument("file", nargs="?", default="-")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", type=_pair, help="two vertex ids, comma separated")
    group.add_argument(
        "--all-adjacent", action="store_true", help="every adjacent pair instead"
    )
    p.set_defaults(func=_cmd_ollivier)

    p = sub.add_parser(
        "sphere-curv", help="sphere curvatures beside the associated chain's"
    )
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--root", required=True)
    p.set_defaults(func=_cmd_sphere_curv)

    p = sub.add_parser("bdc", help="reduce to the associated birth-death chain")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--root", required=True)
    p.set_defaults(func=_cmd_bdc)

    p = sub.add_parser("gen", help="emit a built-in example graph or chain")
    p.add_argument(
        "generator",
        choices=["chain", "gprime", "figure1", "mirror", "ollivier-match"],
    )
    p.add_argument(
        "--n", type=_positive_int, default=8, help="horizon for chain/gprime/mirror"
    )
    p.add_argument(
        "--of",
        default="chain",
        help="mirror source: chain, gprime, or a chain JSON file (- for stdin)",
    )
    p.add_argument("--seq", help="comma-separated rationals for ollivier-match")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("compare", help="growth relations, volume ledger, constant")
    p.add_argument("files", nargs="*", help="two payloads: first vs second")
    p.add_argument(
        "--against", default=None, help="reference payload; the subject comes on stdin"
    )
    p.add_argument("--root1", required=True, help="root in the first payload")
    p.add_argument("--root2", required=True, help="root in the second payload")
    p.add_argument(
        "--outside",
        type=_positive_int,
        default=None,
        help="also check domination only from this radius on",
    )
    p.add_argument(
        "--constant",
        action="store_true",
        help="compute the volume-ratio constant (needs --outside)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="run the seeded verification suite")
    p.add_argument(
        "--seed", type=int, default=None, help="override CURVEGRAPH_SEED (default 7)"
    )
    p.add_argument("--instances", type=_positive_int, default=100)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CurvegraphError as exc:
        sys.stderr.write(json.dumps(exc.payload(), sort_keys=True) + "\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
