"""Command-line entry point.

Exit status: 0 success, 1 a check failed, 2 usage error, 3 budget or size guard.
Graphs are read from ``--graph FILE`` or standard input as
``{"n": int, "edges": [[u, v], ...]}``.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import bounds, coloring, experiments, gf2, graph, gray, solver
from .coloring import EdgeColoring
from .errors import BudgetExceeded, DisconnectedGraphError, HypothesisError, NotASpecError, SizeGuardError

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _family_generators():
    gens = dict(graph.GENERATORS)
    gens["theorem52"] = lambda n: graph.theorem52_graph(n).graph
    gens["gk"] = lambda k: graph.gk_graph(k).graph
    return gens


def _read_text(source: str | None, stdin) -> str:
    if source is None or source == "-":
        return stdin.read()
    return Path(source).read_text()


def _load_graph(args, stdin) -> graph.Graph:
    text = _read_text(args.graph, stdin)
    try:
        return graph.Graph.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse graph: {exc}") from exc


def _load_coloring(text: str) -> EdgeColoring:
    """Comma list in edge-id order, inline JSON, or a path to a JSON file."""
    stripped = text.strip()
    if not stripped.startswith(("{", "[")) and Path(stripped).is_file():
        stripped = Path(stripped).read_text().strip()
    try:
        if stripped.startswith("{"):
            return EdgeColoring.from_json(json.loads(stripped))
        if stripped.startswith("["):
            return EdgeColoring(tuple(json.loads(stripped)))
        return coloring.parse_colors(stripped)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse coloring: {exc}") from exc


def _parse_budget(text: str) -> float:
    t = text.strip().lower()
    scale = 1.0
    if t.endswith("ms"):
        t, scale = t[:-2], 1e-3
    elif t.endswith("s"):
        t = t[:-1]
    elif t.endswith("m"):
        t, scale = t[:-1], 60.0
    try:
        return float(t) * scale
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}; use e.g. 60s") from None


def _emit(out, data) -> None:
    out.write(json.dumps(data, indent=2) + "\n")


# -- subcommands --------------------------------------------------------------------


def cmd_gen(args, out, stdin) -> int:
    gens = _family_generators()
    if args.family not in gens:
        raise UsageError(f"unknown family {args.family!r}; choose from {sorted(gens)}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            g = gens[args.family](*args.params)
        except TypeError as exc:
            raise UsageError(f"wrong parameters for {args.family}: {exc}") from exc
    if args.dot:
        out.write(g.to_dot(args.family) + "\n")
    else:
        out.write(json.dumps(g.to_json()) + "\n")
    return EXIT_OK


def cmd_check_spec(args, out, stdin) -> int:
    g = _load_graph(args, stdin)
    phi = _load_coloring(args.coloring)
    res = coloring.canonicalize(g, phi, args.root)
    _emit(out, res.to_json())
    return EXIT_OK if res.is_spec else EXIT_CHECK


def cmd_canonicalize(args, out, stdin) -> int:
    g = _load_graph(args, stdin)
    res = coloring.canonicalize(g, _load_coloring(args.coloring), args.root)
    _emit(out, res.to_json())
    return EXIT_OK if res.is_spec else EXIT_CHECK


def cmd_check_pec(args, out, stdin) -> int:
    g = _load_graph(args, stdin)
    phi = _load_coloring(args.coloring)
    found = coloring.find_parity_path(g, phi, max_vertices=args.max_vertices, node_budget=args.node_budget)
    _emit(out, {"is_pec": found is None, "parity_path": found})
    return EXIT_OK if found is None else EXIT_CHECK


def _solve(args, out, stdin, fn) -> int:
    g = _load_graph(args, stdin)
    try:
        res = fn(g, args.budget, args.root)
    except BudgetExceeded as exc:
        witness = exc.witness
        if witness is not None and not isinstance(witness, EdgeColoring):
            witness = [gf2.to_hex(x) for x in witness]
        _emit(out, {"value": None, "status": "interval", "lower": exc.lower, "upper": exc.upper, "witness": witness})
        return EXIT_GUARD
    _emit(out, res.to_json())
    return EXIT_OK


def cmd_phat(args, out, stdin) -> int:
    return _solve(args, out, stdin, solver.exact_phat)


def cmd_p(args, out, stdin) -> int:
    return _solve(args, out, stdin, solver.exact_p)


def cmd_bounds(args, out, stdin) -> int:
    out.write("n\tell\tlower\tgray_count\tupper\n")
    for n in args.n:
        ells = args.ell or list(range(1, bounds.ceil_lg(n) + 1))
        for ell in ells:
            lower, upper = bounds.pathpower_bounds(n, ell)
            count = sum(gray.color_census(n, ell).values())
            out.write(f"{n}\t{ell}\t{lower}\t{count}\t{upper}\n")
    return EXIT_OK


def cmd_hopf_stiefel(args, out, stdin) -> int:
    value = bounds.hopf_stiefel(args.s, args.t)
    if args.check:
        other = bounds.hopf_stiefel_binomial(args.s, args.t)
        if other != value:
            out.write(f"{value} (binomial definition gives {other})\n")
            return EXIT_CHECK
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_gray(args, out, stdin) -> int:
    if args.check_trim is not None:
        checked, failures = gray.trim_sweep(args.check_trim)
        _emit(out, {"max_m": args.check_trim, "checked": checked, "failures": [list(f) for f in failures]})
        return EXIT_OK if not failures else EXIT_CHECK
    if args.n is None or args.ell is None:
        raise UsageError("gray needs --n and --ell (or --check-trim M)")
    gc = gray.gray_coloring(args.n, args.ell)
    data = {
        "n": args.n,
        "ell": args.ell,
        "labels": [gf2.to_hex(x) for x in gc.labels],
        "coloring": gc.coloring.to_json(),
        "num_colors": gc.coloring.num_colors,
        "is_spec": coloring.is_spec(gc.graph, gc.coloring),
    }
    if gray.in_regime(args.n, args.ell):
        census = gray.color_census(args.n, args.ell)
        lower, upper = bounds.pathpower_bounds(args.n, args.ell)
        data["census"] = {str(k): v for k, v in census.items()}
        data["bounds"] = {
            "lower": lower,
            "upper": upper,
            "gray_count_bound": bounds.pathpower_gray_count_bound(args.n, args.ell),
            "strict_sandwich": lower < data["num_colors"] < upper,
        }
    _emit(out, data)
    return EXIT_OK if data["is_spec"] else EXIT_CHECK


def cmd_embed(args, out, stdin) -> int:
    g = _load_graph(args, stdin)
    try:
        emb = solver.hypercube_embed(g, args.budget)
    except BudgetExceeded as exc:
        _emit(out, {"k": bounds.ceil_lg(g.n), "embedding": None, "status": "interval", "lower": exc.lower})
        return EXIT_GUARD
    k = bounds.ceil_lg(g.n)
    coords = None if emb is None else {str(v): "".join(map(str, t)) for v, t in sorted(emb.items())}
    _emit(out, {"k": k, "embedding": coords})
    return EXIT_OK if emb is not None else EXIT_CHECK


def cmd_experiment(args, out, stdin) -> int:
    if args.id == "run-all":
        rows = experiments.run_all(args.seed)
    else:
        rows = experiments.run_experiment(args.id, args.seed)
    if args.format == "lines":
        for r in rows:
            out.write(r.line() + "\n")
    else:
        _emit(out, [r.to_json() for r in rows])
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parityspec", description="Strong parity edge-colorings at desk scale.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp):
        sp.add_argument("--graph", help="graph JSON file ('-' or omitted: standard input)")
        sp.add_argument("--root", type=int, default=0)

    sp = sub.add_parser("gen", help="emit a generated graph")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    sp.set_defaults(func=cmd_gen)

    for name, fn, helptext in (
        ("check-spec", cmd_check_spec, "exit 0 iff the coloring is a spec"),
        ("canonicalize", cmd_canonicalize, "canonical labeling and coloring of a spec"),
    ):
        sp = sub.add_parser(name, help=helptext)
        graph_arg(sp)
        sp.add_argument("--coloring", required=True, help="e.g. 1,2,1,3, a JSON object, or a JSON file")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("check-pec", help="exit 0 iff no parity path exists")
    graph_arg(sp)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--max-vertices", type=int, default=coloring.PEC_VERTEX_CAP)
    sp.add_argument("--node-budget", type=int, default=None)
    sp.set_defaults(func=cmd_check_pec)

    for name, fn in (("phat", cmd_phat), ("p", cmd_p)):
        sp = sub.add_parser(name, help=f"exact {name} with a witness")
        graph_arg(sp)
        sp.add_argument("--budget", type=_parse_budget, default=solver.DEFAULT_BUDGET, help="time budget, e.g. 60s")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("bounds", help="TSV table of path-power bounds")
    sp.add_argument("--n", type=int, action="append", required=True)
    sp.add_argument("--ell", type=int, action="append")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("hopf-stiefel", help="the Hopf-Stiefel function s o t")
    sp.add_argument("s", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("--check", action="store_true", help="also compare against the binomial definition")
    sp.set_defaults(func=cmd_hopf_stiefel)

    sp = sub.add_parser("gray", help="Gray spec of a path power")
    sp.add_argument("--n", type=int)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--check-trim", type=int, metavar="M")
    sp.set_defaults(func=cmd_gray)

    sp = sub.add_parser("embed", help="embed into Q_k, k = ceil(lg n)")
    graph_arg(sp)
    sp.add_argument("--budget", type=_parse_budget, default=solver.DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("experiment", help="run an acceptance experiment")
    sp.add_argument("id", choices=[*experiments.EXPERIMENTS, "run-all"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "lines"), default="json")
    sp.set_defaults(func=cmd_experiment)
    return p


def run_command(argv=None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out, stdin)
    except (SizeGuardError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NotASpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (UsageError, DisconnectedGraphError, HypothesisError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
