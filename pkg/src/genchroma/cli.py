"""Command-line surface: analyze, generate, sweep and oracle-check.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 anomaly (a violated
claim or an oracle mismatch), 4 solver limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import ParseError, SolverLimitError, VerificationError
from .graphs import FAMILIES, FamilySpec, encode_graph6, generate, parse_edge_list, parse_graph6
from .reports import BoundReport, SweepSpec, analyze, emit_csv, oracle_scan, run_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_ANOMALY = 3
EXIT_LIMIT = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this CLI reserves 2 for parse errors
    def error(self, message):
        raise _UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"bad probability {text!r}, expected num/den") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genchroma", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="report all invariants of one graph")
    p_an.add_argument("path", help="input file, or - for stdin")
    p_an.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_an.add_argument("--csv", action="store_true", help="emit CSV instead of text")

    p_gen = sub.add_parser("generate", help="emit a family graph as graph6")
    p_gen.add_argument("--family", choices=FAMILIES, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--r", type=int, default=None, help="part count (turan)")
    p_gen.add_argument("--p", type=_fraction, default=None, help="edge probability num/den (gnp)")
    p_gen.add_argument("--seed", type=int, default=0, help="random seed (gnp)")

    p_sw = sub.add_parser("sweep", help="analyze a graph ensemble and write CSV")
    p_sw.add_argument("--mode", choices=("exhaustive", "random"), required=True)
    p_sw.add_argument("--n", type=int, required=True)
    p_sw.add_argument("--count", type=int, default=None)
    p_sw.add_argument("--p", type=_fraction, default=None)
    p_sw.add_argument("--seed", type=int, default=None)
    p_sw.add_argument("--oracle-max-n", type=int, default=5)
    p_sw.add_argument("--out", required=True, help="CSV output path")

    p_oc = sub.add_parser("oracle-check", help="gate the greedy solver against the oracle")
    p_oc.add_argument("--max-n", type=int, required=True)
    p_oc.add_argument("--count", type=int, default=200, help="samples per n above 5")
    p_oc.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p_oc.add_argument("--seed", type=int, default=1)

    return parser


def _read_graph(path: str, fmt: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="ascii").read()
    return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)


def _print_report(report: BoundReport) -> None:
    def flag(value):
        return "-" if value is None else ("ok" if value else "FAIL")

    print(f"graph_id: {report.graph_id}")
    print(f"n={report.n} e={report.e} sum_d={report.sum_d} sum_d2={report.sum_d2}")
    omega = "-" if report.omega is None else report.omega
    chi = "-" if report.chi is None else report.chi
    print(f"phi={report.phi} omega={omega} chi={chi}")
    print(f"lower bounds: mean={report.lb_mean} quad_mean={report.lb_quad_mean}")
    print(f"witness parts: {'+'.join(str(s) for s in report.witness_partition)}")
    print(f"quad bound equality: {'yes' if report.quad_bound_equality else 'no'}")
    eq = "-" if report.clique_bound_equality is None else (
        "yes" if report.clique_bound_equality else "no"
    )
    print(
        "checks: "
        f"phi_edge={flag(report.phi_edge_bound_ok)} "
        f"turan_edge={flag(report.turan_edge_bound_ok)} "
        f"partition_square={flag(report.partition_square_ok)} "
        f"partition_sigma={flag(report.partition_sigma_ok)} "
        f"clique_bound={flag(report.clique_bound_ok)} (equality={eq}) "
        f"seq_deltaset={flag(report.seq_deltaset_bound_ok)} "
        f"seq_degree_sum={flag(report.seq_degree_sum_bound_ok)}"
    )


def _run(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        report = analyze(_read_graph(args.path, args.format))
        if args.csv:
            sys.stdout.write(emit_csv([report]))
        else:
            _print_report(report)
        return EXIT_OK

    if args.command == "generate":
        spec = FamilySpec(args.family, args.n, r=args.r, p=args.p, seed=args.seed)
        print(encode_graph6(generate(spec)))
        return EXIT_OK

    if args.command == "sweep":
        spec = SweepSpec(
            mode=args.mode,
            n=args.n,
            count=args.count,
            p=args.p,
            seed=args.seed,
            oracle_max_n=args.oracle_max_n,
        )
        result = run_sweep(spec)
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(emit_csv(result.reports))
        s = result.summary
        print(
            f"graphs={s.graphs} anomalies={s.anomalies} equality_hits={s.equality_hits} "
            f"oracle_checked={s.oracle_checked} min_gap={s.min_gap} mean_gap={s.mean_gap}"
        )
        return EXIT_OK

    if args.command == "oracle-check":
        checked, mismatches = oracle_scan(
            args.max_n, count=args.count, p=args.p, seed=args.seed
        )
        if mismatches:
            for g6 in mismatches:
                print(f"MISMATCH {g6}", file=sys.stderr)
            print(f"checked={checked} mismatches={len(mismatches)}")
            return EXIT_ANOMALY
        print(f"checked={checked} mismatches=0")
        return EXIT_OK

    raise AssertionError("unreachable")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SolverLimitError as exc:
        print(f"solver limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except VerificationError as exc:
        print(f"anomaly: {exc}", file=sys.stderr)
        return EXIT_ANOMALY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
