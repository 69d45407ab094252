"""Command-line interface.

Subcommands: generate, count, analyze, transition, matrix-lemma,
verify-bounds.  Machine reports go to stdout (JSON with --json),
human-readable messages to stderr.  Exit codes: 0 success, 1 bound
failure, 2 input error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .bounds import DEFAULT_K, verify_with_budget_guard
from .coloring import DEFAULT_BUDGET, count_3_colorings_detailed, kernel_backend
from .errors import BudgetExceededError, GraphFormatError
from .generators import GeneratorSpec, from_spec
from .laminar import extract, dilworth_decompose
from .plane_graph import load_plane_graph, plane_graph_to_json, validate_cycle
from .transition import (
    is_doubling,
    matrix_report,
    transition_matrix,
    verify_product_bound,
)

EXIT_OK = 0
EXIT_BOUND_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


def _emit(data: dict, as_json: bool, human: str | None = None):
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(human if human is not None else json.dumps(data, sort_keys=True))


def _load(path: str):
    try:
        return load_plane_graph(path)
    except FileNotFoundError:
        raise GraphFormatError({"error": "no_such_file", "path": path})
    except json.JSONDecodeError as exc:
        raise GraphFormatError({"error": "bad_json", "detail": str(exc)})


def _cmd_generate(args) -> int:
    spec = GeneratorSpec(family=args.family, k=args.k, seed=args.seed,
                         ops=args.ops)
    g = from_spec(spec)
    text = plane_graph_to_json(g)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit({"family": args.family, "k": args.k, "seed": args.seed,
               "ops": args.ops, "vertices": g.n, "out": args.out},
              args.json,
              f"wrote {args.family} graph with {g.n} vertices to {args.out}")
    return EXIT_OK


def _cmd_count(args) -> int:
    g = _load(args.graph)
    res = count_3_colorings_detailed(g, budget=args.budget, threads=args.threads)
    record = {"graph": args.graph, "count": res.count, "budget_used": res.nodes}
    _emit(record, args.json,
          f"{args.graph}: {res.count} proper 3-colorings "
          f"({res.nodes} search nodes)")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    g = _load(args.graph)
    try:
        outcome = extract(g, args.k)
    except ValueError as exc:
        raise GraphFormatError({"error": "bad_input", "detail": str(exc)})
    lab = g.label
    record = {"outcome": outcome.kind, "vertex": None, "family": None,
              "chain": None, "antichain": None, "k": args.k}
    if outcome.kind == "reducible":
        record["vertex"] = lab(outcome.vertex)
        human = f"reducible vertex {record['vertex']} (k={args.k})"
    else:
        chain, anti = dilworth_decompose(g, outcome.family)
        record["family"] = [[lab(v) for v in c] for c in outcome.family]
        record["chain"] = [[lab(v) for v in c] for c in chain]
        record["antichain"] = [[lab(v) for v in c] for c in anti]
        human = (f"laminar family of {len(outcome.family)} 5-cycles; "
                 f"chain {len(chain.cycles)}, antichain {len(anti.cycles)} "
                 f"(k={args.k})")
    _emit(record, args.json, human)
    return EXIT_OK


def _parse_cycle(g, text: str):
    try:
        ids = [g.index(x) for x in text.split(",")]
    except KeyError as exc:
        raise GraphFormatError({"error": "unknown_vertex", "vertex": str(exc.args[0])})
    try:
        return validate_cycle(g, ids)
    except ValueError as exc:
        raise GraphFormatError({"error": "bad_cycle", "detail": str(exc)})


def _cmd_transition(args) -> int:
    g = _load(args.graph)
    c1 = _parse_cycle(g, args.outer)
    c2 = _parse_cycle(g, args.inner)
    try:
        m = transition_matrix(g, c1, c2, budget=args.budget,
                              threads=args.threads)
    except ValueError as exc:
        raise GraphFormatError({"error": "bad_cycle_pair", "detail": str(exc)})
    record = matrix_report(m, g)
    rows = "\n".join("  " + " ".join(f"{x:4d}" for x in row)
                     for row in m.entries)
    _emit(record, args.json,
          f"transition matrix ({record['classification']}, "
          f"raw count {record['raw_count']}):\n{rows}")
    return EXIT_OK


def _random_doubling(rng: random.Random):
    while True:
        m = [[0] * 5 for _ in range(5)]
        for i in range(5):
            for j in rng.sample(range(5), 2):
                m[i][j] = rng.randint(1, 3)
        cand = tuple(tuple(r) for r in m)
        if is_doubling(cand):
            return cand


def _random_dominant(rng: random.Random):
    from .transition import BLOCK_DIAGONAL
    sigma = rng.sample(range(5), 5)
    tau = rng.sample(range(5), 5)
    return tuple(tuple(BLOCK_DIAGONAL[sigma[i]][tau[j]] + rng.randint(0, 1)
                       for j in range(5)) for i in range(5))


def random_matrix_chain(n: int, rng: random.Random):
    """A seeded chain of matrices with their known classifications.

    Doubling members are doubling by construction; dominant members are
    row/column permutations of the reference matrix plus noise, hence
    dominant by construction.
    """
    mats, kinds = [], []
    for _ in range(n):
        if rng.random() < 0.5:
            mats.append(_random_doubling(rng))
            kinds.append("doubling")
        else:
            mats.append(_random_dominant(rng))
            kinds.append("dominant")
    return mats, kinds


def _cmd_matrix_lemma(args) -> int:
    rng = random.Random(args.seed)
    violations = 0
    first = None
    for trial in range(args.trials):
        n = rng.randint(1, args.n)
        report = verify_product_bound(*random_matrix_chain(n, rng))
        if not report.ok:
            violations += 1
            if first is None:
                first = {"trial": trial, "n": n,
                         "first_violation": report.first_violation}
    record = {"n": args.n, "seed": args.seed, "trials": args.trials,
              "violations": violations, "pass": violations == 0}
    if first:
        record["first_failure"] = first
    _emit(record, args.json,
          f"matrix chains up to length {args.n}: {args.trials} trials, "
          f"{violations} violations -> "
          f"{'PASS' if violations == 0 else 'FAIL'}")
    return EXIT_OK if violations == 0 else EXIT_BOUND_FAILURE


def _cmd_verify_bounds(args) -> int:
    failures = 0
    for path in args.graphs:
        g = _load(path)
        try:
            report = verify_with_budget_guard(
                g, k=args.k, budget=args.budget, threads=args.threads,
                graph_name=path)
        except ValueError as exc:
            raise GraphFormatError({"error": "bad_input", "path": path,
                                    "detail": str(exc)})
        record = report.to_json_dict()
        status = "PASS" if report.all_pass else "FAIL"
        _emit(record, args.json,
              f"{path}: n={report.n} count={report.exact_count} "
              f"outcome={report.outcome} -> {status}")
        if not report.all_pass:
            failures += 1
    return EXIT_OK if failures == 0 else EXIT_BOUND_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threecolor",
        description="Exact 3-coloring counting and lower-bound verification "
                    "for triangle-free plane graphs.")
    parser.add_argument("--version", action="version",
                        version=f"threecolor {__version__} "
                                f"(kernel: {kernel_backend()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a corpus graph as JSON")
    p.add_argument("--family", required=True,
                   choices=["tower", "shared", "dodeca", "garden", "perturbed"])
    p.add_argument("--k", type=int, default=1, help="height / pentagon count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ops", type=int, default=0,
                   help="number of perturbation ops (perturbed family)")
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("count", help="count proper 3-colorings exactly")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("analyze", help="run the reduction dichotomy and "
                                       "chain/antichain decomposition")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=DEFAULT_K)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("transition", help="transition matrix between two "
                                          "nested 5-cycles")
    p.add_argument("graph")
    p.add_argument("--outer", required=True,
                   help="comma-separated outer cycle vertices")
    p.add_argument("--inner", required=True,
                   help="comma-separated inner cycle vertices")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_transition)

    p = sub.add_parser("matrix-lemma", help="property-check the product "
                                            "growth bound on random chains")
    p.add_argument("--n", type=int, default=20, help="maximum chain length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_matrix_lemma)

    p = sub.add_parser("verify-bounds", help="check every coloring lower "
                                             "bound on the given graphs")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--k", type=int, default=DEFAULT_K)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(json.dumps({"error": exc.report.get("error"), **exc.report},
                         sort_keys=True))
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except BudgetExceededError as exc:
        record = exc.partial_report or {"error": "budget", "budget": exc.budget}
        print(json.dumps(record, sort_keys=True))
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
