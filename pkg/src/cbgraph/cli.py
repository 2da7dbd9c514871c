"""Command-line interface.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 for yes or
success, 1 for a no answer or a mismatch, 2 for errors.
"""
from __future__ import annotations

import argparse
import sys

from .bench import DEFAULT_CAP, FAMILIES, records_to_csv, run_bench
from .enumeration import enumerate_solutions
from .formats import GraphFormatError, load_graph, load_hypergraph
from .hypergraph import is_beta_acyclic
from .ordering import degeneracy_ranking, natural_ranking
from .recognition import (
    DEFAULT_BRUTE_LIMIT,
    CbeoFound,
    LongInducedCycle,
    OddCycle,
    brute_enumerate,
    find_cbeo,
    is_chordal_bipartite,
)


def _ranking_for(g, name: str):
    return natural_ranking(g) if name == "natural" else degeneracy_ranking(g)


def _fmt(solution: tuple[int, ...]) -> str:
    return " ".join(str(v) for v in solution)


def cmd_enumerate(args) -> int:
    g = load_graph(args.file)
    ranking = _ranking_for(g, args.ranking)
    if args.count_only:
        stats = enumerate_solutions(g, ranking, limit=args.limit)
        print(stats.solutions)
    else:
        out = sys.stdout

        def sink(sol: tuple[int, ...]) -> None:
            if sol or not args.no_empty:
                out.write(_fmt(sol) + "\n")

        stats = enumerate_solutions(g, ranking, sink=sink, limit=args.limit)
    if args.limit is not None and stats.solutions >= args.limit:
        print(f"limit of {args.limit} solutions reached", file=sys.stderr)
    if args.stats:
        print(
            f"solutions={stats.solutions} attempts={stats.attempts}"
            f" rejections={stats.rejections} max_depth={stats.max_depth}"
            f" max_waste={stats.max_waste}",
            file=sys.stderr,
        )
    return 0


def cmd_recognize(args) -> int:
    g = load_graph(args.file)
    verdict, cert = is_chordal_bipartite(g, g.vertices())
    if verdict:
        print("yes")
        assert isinstance(cert, CbeoFound)
        print(f"cbeo {_fmt(cert.order)}")
        return 0
    print("no")
    if isinstance(cert, OddCycle):
        print(f"odd-cycle {_fmt(cert.cycle)}")
    elif isinstance(cert, LongInducedCycle):
        print(f"induced-cycle {_fmt(cert.cycle)}")
    return 1


def cmd_cbeo(args) -> int:
    g = load_graph(args.file)
    ranking = _ranking_for(g, args.ranking)
    result = find_cbeo(g, g.vertices(), ranking)
    if isinstance(result, CbeoFound):
        print(_fmt(result.order))
        return 0
    print("none")
    print(f"stuck residue: {_fmt(result.vertices)}", file=sys.stderr)
    return 1


def cmd_degeneracy(args) -> int:
    g = load_graph(args.file)
    ranking = degeneracy_ranking(g)
    print(ranking.k)
    print(_fmt(ranking.order()))
    return 0


def cmd_beta_acyclic(args) -> int:
    h = load_hypergraph(args.file, on_warning=lambda m: print(m, file=sys.stderr))
    verdict = is_beta_acyclic(h, method=args.method)
    print("yes" if verdict else "no")
    return 0 if verdict else 1


def cmd_oracle_enumerate(args) -> int:
    g = load_graph(args.file)
    solutions = sorted(brute_enumerate(g))
    if args.count_only:
        print(len(solutions))
    else:
        for sol in solutions:
            print(_fmt(sol))
    return 0


def cmd_compare(args) -> int:
    g = load_graph(args.file)
    ranking = _ranking_for(g, args.ranking)
    emitted: list[tuple[int, ...]] = []
    enumerate_solutions(g, ranking, sink=emitted.append)
    oracle = brute_enumerate(g)
    dupes = len(emitted) - len(set(emitted))
    missing = oracle - set(emitted)
    extra = set(emitted) - oracle
    if not missing and not extra and dupes == 0:
        print(f"match: {len(oracle)} solutions")
        return 0
    print(f"mismatch: enumerated {len(emitted)} (dupes {dupes}), oracle {len(oracle)}")
    for sol in sorted(missing):
        print(f"only-oracle: {_fmt(sol)}")
    for sol in sorted(extra):
        print(f"only-enumerate: {_fmt(sol)}")
    return 1


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    records = run_bench(args.family, sizes, cap=args.cap, seed=args.seed)
    sys.stdout.write(records_to_csv(records))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbgraph",
        description=(
            "Chordal bipartite graphs: enumerate chordal bipartite induced"
            " subgraphs, recognize the class with certificates, and test"
            " hypergraph beta-acyclicity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "enumerate",
        help="list all chordal bipartite induced subgraphs, one per line"
        " (the empty set is an empty line)",
    )
    p.add_argument("file", help="graph file")
    p.add_argument("--count-only", action="store_true", help="print only the count")
    p.add_argument("--limit", type=int, default=None, metavar="N", help="stop after N solutions")
    p.add_argument(
        "--ranking",
        choices=("natural", "degeneracy"),
        default="degeneracy",
        help="vertex ranking driving the traversal (default degeneracy)",
    )
    p.add_argument("--no-empty", action="store_true", help="do not print the empty solution")
    p.add_argument("--stats", action="store_true", help="print traversal statistics to stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("recognize", help="is the graph chordal bipartite? prints a certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("cbeo", help="print a weak-simplicial elimination order, or 'none'")
    p.add_argument("file")
    p.add_argument(
        "--ranking",
        choices=("natural", "degeneracy"),
        default="degeneracy",
    )
    p.set_defaults(func=cmd_cbeo)

    p = sub.add_parser("degeneracy", help="print the degeneracy and a ranking order")
    p.add_argument("file")
    p.set_defaults(func=cmd_degeneracy)

    p = sub.add_parser("beta-acyclic", help="is the hypergraph beta-acyclic?")
    p.add_argument("file", help="hypergraph file, one hyperedge per line")
    p.add_argument(
        "--method",
        choices=("incidence", "elimination", "brute"),
        default="incidence",
    )
    p.set_defaults(func=cmd_beta_acyclic)

    p = sub.add_parser("oracle", help="brute-force reference implementations")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    po = osub.add_parser(
        "enumerate",
        help=f"exhaustive subset enumeration (at most {DEFAULT_BRUTE_LIMIT} vertices)",
    )
    po.add_argument("file")
    po.add_argument("--count-only", action="store_true")
    po.set_defaults(func=cmd_oracle_enumerate)

    p = sub.add_parser("compare", help="check the enumeration against the brute-force oracle")
    p.add_argument("file")
    p.add_argument(
        "--ranking",
        choices=("natural", "degeneracy"),
        default="degeneracy",
    )
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="benchmark a graph family, CSV on stdout")
    p.add_argument("--family", choices=FAMILIES, default="path")
    p.add_argument("--sizes", default="12,14,16", help="comma-separated sizes")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="skip past this many solutions")
    p.add_argument("--seed", type=int, default=2024)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
