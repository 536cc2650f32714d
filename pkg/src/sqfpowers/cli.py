"""Command line interface.

Subcommands cover the invariants (``invariants``, ``lambda``), the algebra
(``power``, ``betti``, ``linrel``, ``linquot``, ``colon``), the forest
templates (``classify``), and the verification harness (``verify``).  Every
subcommand accepts ``--json`` for machine-readable output conforming to
``schemas/output.schema.json``.

Exit codes: 0 success, 1 theorem-check failure (``verify`` only), 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .betti import (
    DEFAULT_CHARACTERISTIC,
    BettiTable,
    betti_diagram_text,
    has_linear_resolution,
    is_linearly_related_combinatorial,
    is_linearly_related_homological,
    linear_quotients_order,
    multigraded_betti,
)
from .checks import (
    CHECKS,
    CheckContext,
    run_checks,
    summarize,
    theorem_failures,
)
from .edge_ideals import (
    classify_forest,
    colon_square_by_edge,
    edge_ideal,
    lambda_number,
    sqfree_power_via_matchings,
)
from .families import DEFAULT_SEED, FAMILY_HELP, resolve_family
from .graphs import (
    BUILTIN_GRAPH_NAMES,
    Graph,
    builtin_graph,
    complement,
    format_edge_list,
    is_chordal,
    is_forest,
    is_tree,
    parse_graphs,
    to_graph6,
)
from .ideals import (
    MonomialIdeal,
    colon_by_monomial,
    colon_ideal,
    format_ideal,
    monomial,
    monomial_vars,
    parse_ideal,
)
from .matchings import (
    has_perfect_matching,
    induced_matching_number,
    is_equimatchable,
    is_gap_free,
    matching_number,
    restricted_matching_number,
)

GRAPH_SPEC_HELP = (
    "graph source: a builtin name (%s), 'builtin:NAME', 'g6:STRING', "
    "'-' for stdin, or a path to a file holding one graph as an edge list "
    "('n m' header then one 'u v' pair per line) or a graph6 line"
) % ", ".join(BUILTIN_GRAPH_NAMES)


class InputError(Exception):
    """Bad input that should exit with status 2."""


def load_graph(spec: str) -> Graph:
    if spec.startswith("builtin:"):
        return builtin_graph(spec.split(":", 1)[1])
    if spec in BUILTIN_GRAPH_NAMES:
        return builtin_graph(spec)
    if spec.startswith("g6:"):
        text = spec.split(":", 1)[1]
    elif spec == "-":
        text = sys.stdin.read()
    else:
        path = Path(spec)
        if not path.exists():
            raise InputError(
                f"graph spec {spec!r} is not a builtin name, a g6: string, "
                "or an existing file"
            )
        text = path.read_text()
    try:
        graphs = parse_graphs(text)
    except ValueError as exc:
        raise InputError(f"cannot parse graph from {spec!r}: {exc}") from exc
    if len(graphs) != 1:
        raise InputError(
            f"{spec!r} holds {len(graphs)} graphs; this command needs exactly one"
        )
    return graphs[0]


def load_ideal(path_spec: str) -> MonomialIdeal:
    text = sys.stdin.read() if path_spec == "-" else Path(path_spec).read_text()
    try:
        return parse_ideal(text)
    except ValueError as exc:
        raise InputError(f"cannot parse ideal from {path_spec!r}: {exc}") from exc


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _gens_as_lists(I: MonomialIdeal) -> list[list[int]]:
    return [list(monomial_vars(g)) for g in I.gens]


def _power_ideal(args: argparse.Namespace) -> tuple[Graph, MonomialIdeal]:
    G = load_graph(args.graph)
    return G, sqfree_power_via_matchings(G, args.k)


def _ideal_for_algebra(args: argparse.Namespace) -> tuple[Graph | None, MonomialIdeal]:
    """Shared input handling for betti/linrel/linquot: a graph power or an ideal file."""
    if args.ideal is not None:
        return None, load_ideal(args.ideal)
    if args.graph is None:
        raise InputError("provide a GRAPH argument or --ideal FILE")
    return _power_ideal(args)


# ---------------------------------------------------------------------------
# subcommand implementations

def cmd_invariants(args: argparse.Namespace) -> int:
    G = load_graph(args.graph)
    payload = {
        "command": "invariants",
        "graph6": to_graph6(G),
        "n": G.n,
        "edge_count": len(G.edges),
        "nu": matching_number(G),
        "nu1": induced_matching_number(G),
        "nu0": restricted_matching_number(G),
        "equimatchable": is_equimatchable(G),
        "has_perfect_matching": has_perfect_matching(G),
        "gap_free": is_gap_free(G),
        "is_forest": is_forest(G),
        "is_tree": is_tree(G),
        "is_chordal": is_chordal(G),
        "complement_chordal": is_chordal(complement(G)),
    }
    order = (
        "graph6 n edge_count nu nu1 nu0 equimatchable has_perfect_matching "
        "gap_free is_forest is_tree is_chordal complement_chordal"
    ).split()
    text = "\n".join(f"{key}: {payload[key]}" for key in order)
    _emit(payload, args.json, text)
    return 0


def cmd_power(args: argparse.Namespace) -> int:
    G, I = _power_ideal(args)
    payload = {
        "command": "power",
        "graph6": to_graph6(G),
        "n": G.n,
        "k": args.k,
        "nu": matching_number(G),
        "zero": I.is_zero,
        "generator_count": len(I.gens),
        "generators": _gens_as_lists(I),
    }
    _emit(payload, args.json, format_ideal(I).rstrip("\n"))
    return 0


def _betti_payload(I: MonomialIdeal, characteristic: int) -> dict:
    if I.is_zero:
        return {
            "zero": True,
            "n": I.n,
            "characteristic": characteristic,
            "generator_degree": None,
            "entries": [],
            "graded": [],
            "regularity": 1,
            "projective_dimension": None,
            "linear_resolution": True,
            "linearly_related": True,
        }
    table: BettiTable = multigraded_betti(I, characteristic)
    return {
        "zero": False,
        "n": I.n,
        "characteristic": characteristic,
        "generator_degree": table.gen_degree,
        "entries": sorted(
            [i, list(monomial_vars(m)), v] for (i, m), v in table.entries.items()
        ),
        "graded": sorted([i, j, v] for (i, j), v in table.graded().items()),
        "regularity": table.regularity(),
        "projective_dimension": table.projective_dimension(),
        "linear_resolution": has_linear_resolution(I, characteristic),
        "linearly_related": is_linearly_related_combinatorial(I),
    }


def cmd_betti(args: argparse.Namespace) -> int:
    _, I = _ideal_for_algebra(args)
    payload = {"command": "betti", **_betti_payload(I, args.char)}
    lines = [betti_diagram_text(I, args.char)]
    lines.append("")
    lines.append(f"regularity: {payload['regularity']}")
    lines.append(f"projective dimension: {payload['projective_dimension']}")
    lines.append(f"linear resolution: {payload['linear_resolution']}")
    lines.append(f"linearly related: {payload['linearly_related']}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_linrel(args: argparse.Namespace) -> int:
    _, I = _ideal_for_algebra(args)
    comb = homo = None
    if args.method in ("combinatorial", "both"):
        comb = is_linearly_related_combinatorial(I)
    if args.method in ("homological", "both"):
        homo = is_linearly_related_homological(I, args.char)
    verdict = comb if comb is not None else homo
    payload = {
        "command": "linrel",
        "method": args.method,
        "combinatorial": comb,
        "homological": homo,
        "agree": (comb == homo) if args.method == "both" else None,
        "linearly_related": verdict,
    }
    lines = [f"linearly related: {verdict}"]
    if args.method == "both":
        lines.append(f"combinatorial: {comb}")
        lines.append(f"homological (char {args.char}): {homo}")
        lines.append(f"agree: {comb == homo}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_linquot(args: argparse.Namespace) -> int:
    _, I = _ideal_for_algebra(args)
    deadline = time.monotonic() + args.time_budget if args.time_budget else None
    result = linear_quotients_order(I, args.node_budget, deadline=deadline)
    payload = {
        "command": "linquot",
        "status": result.status,
        "nodes": result.nodes,
        "order": (
            [list(monomial_vars(g)) for g in result.order]
            if result.status == "found"
            else None
        ),
    }
    lines = [f"status: {result.status}", f"nodes explored: {result.nodes}"]
    if result.status == "found":
        lines.append(
            "order: " + "; ".join(".".join(map(str, o)) for o in payload["order"])
        )
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_lambda(args: argparse.Namespace) -> int:
    G = load_graph(args.graph)
    if not G.edges:
        raise InputError("lambda needs a graph with at least one edge")
    nu = matching_number(G)
    per_power = [
        {
            "k": k,
            "linearly_related": is_linearly_related_combinatorial(
                sqfree_power_via_matchings(G, k)
            ),
        }
        for k in range(1, nu + 1)
    ]
    lam = lambda_number(G)
    payload = {
        "command": "lambda",
        "graph6": to_graph6(G),
        "lambda": lam,
        "nu": nu,
        "nu0": restricted_matching_number(G),
        "per_power": per_power,
    }
    lines = [f"lambda: {lam}", f"nu: {nu}", f"nu0: {payload['nu0']}"]
    lines += [
        f"  k={row['k']}: linearly related = {row['linearly_related']}"
        for row in per_power
    ]
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_colon(args: argparse.Namespace) -> int:
    G = load_graph(args.graph)
    if (args.l is None) == (args.edge is None):
        raise InputError("colon needs exactly one of -l L or --edge U V")
    I = sqfree_power_via_matchings(G, args.k)
    if args.l is not None:
        J = sqfree_power_via_matchings(G, args.l)
        if J.is_zero:
            raise InputError(
                f"I(G)^[{args.l}] is the zero ideal; the colon is undefined"
            )
        quotient = colon_ideal(I, J)
        equals_power = quotient == I
        payload = {
            "command": "colon",
            "graph6": to_graph6(G),
            "k": args.k,
            "l": args.l,
            "edge": None,
            "generators": _gens_as_lists(quotient),
            "equals_power": equals_power,
            "colon_graph_edges": None,
            "matches_derived_graph": None,
        }
        lines = [format_ideal(quotient).rstrip("\n")]
        lines.append(f"# equals I(G)^[{args.k}]: {equals_power}")
        _emit(payload, args.json, "\n".join(lines))
        return 0
    u, v = args.edge
    if not G.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge of the graph")
    quotient = colon_by_monomial(I, monomial((u, v)))
    derived_edges = None
    matches = None
    if args.k == 2:
        derived = colon_square_by_edge(G, (min(u, v), max(u, v)))
        derived_edges = [list(e) for e in derived.edge_list]
        matches = edge_ideal(derived) == quotient
    payload = {
        "command": "colon",
        "graph6": to_graph6(G),
        "k": args.k,
        "l": None,
        "edge": [u, v],
        "generators": _gens_as_lists(quotient),
        "equals_power": None,
        "colon_graph_edges": derived_edges,
        "matches_derived_graph": matches,
    }
    lines = [format_ideal(quotient).rstrip("\n")]
    if derived_edges is not None:
        lines.append(f"# derived graph edges: {derived_edges}")
        lines.append(f"# matches derived graph: {matches}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    G = load_graph(args.graph)
    if not is_forest(G):
        raise InputError("classification applies to forests only")
    result = classify_forest(G)
    payload = {
        "command": "classify",
        "graph6": to_graph6(G),
        "matched": result.matched,
        "kinds": list(result.kinds()),
        "matches": [
            {
                "kind": m.kind,
                "spine": list(m.spine),
                "bouquets": [list(b) for b in m.bouquets],
            }
            for m in result.matches
        ],
    }
    lines = [f"matched: {result.matched}"]
    for m in result.matches:
        lines.append(
            f"  {m.kind}: spine={list(m.spine)} bouquets={[list(b) for b in m.bouquets]}"
        )
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        if args.json:
            payload = {
                "command": "verify",
                "registry": [
                    {
                        "name": c.name,
                        "kind": c.kind,
                        "scope": c.scope,
                        "statement": c.statement,
                    }
                    for c in CHECKS.values()
                ],
            }
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            for c in CHECKS.values():
                print(f"{c.name:32s} [{c.kind}/{c.scope}] {c.statement}")
        return 0
    if args.family is None:
        raise InputError("verify needs --family (or --list)")
    if args.checks == "all":
        names = None
    else:
        names = [n for n in args.checks.split(",") if n]
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            raise InputError(
                f"unknown checks {unknown}; run 'verify --list' for the registry"
            )
        if not names:
            raise InputError("no check names given")
    ctx = CheckContext(
        characteristic=args.char,
        seed=args.seed,
        node_budget=args.node_budget,
        time_budget_s=args.time_budget,
        random_ideal_count=args.random_ideals,
        random_graph_count=args.random_graphs,
    )
    try:
        graphs = resolve_family(args.family, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    reports = run_checks(names, graphs, ctx, jobs=args.jobs)
    if args.ndjson:
        Path(args.ndjson).write_text(
            "".join(r.to_json_line() + "\n" for r in reports)
        )
    summary = summarize(reports)
    failures = theorem_failures(reports)
    payload = {
        "command": "verify",
        "family": args.family,
        "graph_count": len(graphs),
        "checks": sorted(summary),
        "summary": summary,
        "total_reports": len(reports),
        "theorem_failures": len(failures),
        "failing": [
            {"check": r.check, "instance": r.instance, "witness": r.witness}
            for r in failures[:50]
        ],
        "ndjson": args.ndjson,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        width = max((len(n) for n in summary), default=5)
        print(
            f"{'check'.ljust(width)}  {'pass':>6} {'fail':>6} {'vacuous':>8} {'inconcl':>8}"
        )
        for name in sorted(summary):
            counts = summary[name]
            print(
                f"{name.ljust(width)}  {counts.get('pass', 0):>6} "
                f"{counts.get('fail', 0):>6} {counts.get('vacuous', 0):>8} "
                f"{counts.get('inconclusive', 0):>8}"
            )
        print(
            f"\n{len(graphs)} graphs, {len(reports)} reports, "
            f"{len(failures)} theorem failures"
        )
        for r in failures[:20]:
            print(f"FAIL {r.check} on {r.instance}: {r.witness}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser wiring

def _add_graph_arg(p: argparse.ArgumentParser, optional: bool = False) -> None:
    if optional:
        p.add_argument("graph", nargs="?", default=None, help=GRAPH_SPEC_HELP)
    else:
        p.add_argument("graph", help=GRAPH_SPEC_HELP)


def _add_algebra_inputs(p: argparse.ArgumentParser, default_k: int | None) -> None:
    _add_graph_arg(p, optional=True)
    p.add_argument(
        "-k",
        type=int,
        default=default_k,
        help=f"squarefree power exponent (default {default_k})",
    )
    p.add_argument(
        "--ideal",
        default=None,
        metavar="FILE",
        help="operate on an ideal file instead of a graph power ('-' for stdin)",
    )


def _add_char(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--char",
        type=int,
        default=DEFAULT_CHARACTERISTIC,
        help=f"prime field characteristic (default {DEFAULT_CHARACTERISTIC})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqfpowers",
        description=(
            "Matching invariants, squarefree powers of edge ideals, Betti "
            "tables over finite prime fields, and a verification harness."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("invariants", help="matching and structural invariants")
    _add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("power", help="generators of the k-th squarefree power")
    _add_graph_arg(p)
    p.add_argument("-k", type=int, required=True, help="power exponent")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("betti", help="multigraded Betti table and derived data")
    _add_algebra_inputs(p, default_k=1)
    _add_char(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("linrel", help="are the first syzygies linear?")
    _add_algebra_inputs(p, default_k=1)
    _add_char(p)
    p.add_argument(
        "--method",
        choices=("combinatorial", "homological", "both"),
        default="combinatorial",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linrel)

    p = sub.add_parser("linquot", help="search for a linear-quotients order")
    _add_algebra_inputs(p, default_k=1)
    p.add_argument("--node-budget", type=int, default=10_000_000)
    p.add_argument(
        "--time-budget", type=float, default=None, metavar="SECONDS"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linquot)

    p = sub.add_parser(
        "lambda", help="least k with all powers from k on linearly related"
    )
    _add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser(
        "colon",
        help="quotient of a squarefree power by a lower power or by an edge",
    )
    _add_graph_arg(p)
    p.add_argument("-k", type=int, default=2, help="power exponent (default 2)")
    p.add_argument(
        "-l",
        type=int,
        default=None,
        help="compute I^[k] : I^[l] and report whether it equals I^[k]",
    )
    p.add_argument(
        "-e",
        "--edge",
        type=int,
        nargs=2,
        default=None,
        metavar=("U", "V"),
        help="edge whose monomial divides out (alternative to -l)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("classify", help="match a forest against the templates")
    _add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the theorem checks over a family")
    p.add_argument(
        "checks",
        nargs="?",
        default="all",
        help="'all' or comma-separated check names (default: all)",
    )
    p.add_argument("--family", default=None, help=FAMILY_HELP)
    p.add_argument("--list", action="store_true", help="print the registry and exit")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_char(p)
    p.add_argument("--node-budget", type=int, default=10_000_000)
    p.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--random-ideals", type=int, default=500)
    p.add_argument("--random-graphs", type=int, default=1000)
    p.add_argument(
        "--ndjson", default=None, metavar="PATH", help="write one report per line"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
