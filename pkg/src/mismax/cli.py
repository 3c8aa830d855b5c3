"""Command-line surface: count, bound, extremal, verify, trace.

Exit codes: 0 success, 1 verification failure (bound violated or attainer
set not the expected one), 2 usage or parse errors. Stdout is deterministic
for fixed inputs and flags; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Iterator, Sequence

from .canon import CanonicalForm
from .codec import CodecError, graph6_encode, read_edge_list, read_graph6_stream, write_edge_list
from .counting import mis_size_profile, polynomial_string
from .extremal import (
    AUTO,
    bound_f,
    build_H,
    build_turan,
    induction_split,
    proof_subcase,
    verify_bound_exhaustive,
    verify_bound_stream,
)
from .graph import Graph


def _open_input(path: str):
    if path == "-":
        return sys.stdin
    return open(path, "r")


def _read_graphs(path: str, fmt: str) -> Iterator[Graph]:
    fh = _open_input(path)
    try:
        if fmt == "graph6":
            yield from read_graph6_stream(fh)
        else:
            yield read_edge_list(fh.read())
    finally:
        if fh is not sys.stdin:
            fh.close()


def _parse_t_spec(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def cmd_count(args: argparse.Namespace) -> int:
    out = sys.stdout
    if args.csv:
        out.write("index,n,counts,total,poly\n")
    for index, g in enumerate(_read_graphs(args.input, args.format)):
        profile = mis_size_profile(g)
        coeffs = profile.coefficients()
        counts_str = ",".join(str(c) for c in coeffs)
        poly = polynomial_string(coeffs)
        if args.csv:
            out.write(f'{index},{g.n},"{counts_str}",{profile.total()},{poly}\n')
        else:
            out.write(
                f"graph={index} n={g.n} counts={counts_str} "
                f"total={profile.total()} poly={poly}\n"
            )
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    ts = _parse_t_spec(args.t)
    sys.stdout.write("n,t,q,r,f\n")
    for t in ts:
        d = bound_f(args.n, t)
        sys.stdout.write(f"{d.n},{d.t},{d.q},{d.r},{d.f}\n")
    return 0


def cmd_extremal(args: argparse.Namespace) -> int:
    n, t = args.n, args.t
    g = build_H(n, t) if args.which == "H" else build_turan(n, t)
    if args.format == "graph6":
        sys.stdout.write(graph6_encode(g) + "\n")
    else:
        sys.stdout.write(write_edge_list(g))
    return 0


def _format_attainers(forms: Sequence[CanonicalForm]) -> str:
    return "|".join(graph6_encode(cf.to_graph()) for cf in forms) or "-"


def _print_report(report) -> None:
    sys.stdout.write(
        f"n={report.n} t={report.t} f={report.f} "
        f"max_observed={report.max_observed} "
        f"bound_holds={str(report.bound_holds).lower()} "
        f"unique_attainer={str(report.unique_attainer).lower()} "
        f"attainers={_format_attainers(report.attainers)} "
        f"graphs_examined={report.graphs_examined} "
        f"coverage={report.coverage}\n"
    )


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    reports = []
    if args.input is not None:
        if args.t is None:
            raise SystemExit2("--t is required with --input")
        graphs = _read_graphs(args.input, "graph6")
        reports.append(
            verify_bound_stream(graphs, args.t, side=args.side, source=args.input)
        )
        exhaustive = False
    else:
        if args.n is None:
            raise SystemExit2("one of --n or --input is required")
        ts = None if args.all_t else [args.t] if args.t is not None else None
        if ts is None and not args.all_t:
            raise SystemExit2("give --t or --all-t")
        reports.extend(
            verify_bound_exhaustive(
                args.n,
                ts=ts,
                side=args.side,
                workers=args.workers,
                allow_n8=args.n8_opt_in,
            )
        )
        exhaustive = True
    ok = True
    for report in reports:
        _print_report(report)
        if not report.bound_holds or (exhaustive and not report.unique_attainer):
            ok = False
    sys.stderr.write(f"wall_time={time.monotonic() - started:.3f}s\n")
    return 0 if ok else 1


def cmd_trace(args: argparse.Namespace) -> int:
    graphs = list(_read_graphs(args.input, args.format))
    if len(graphs) != 1:
        raise SystemExit2(f"trace expects exactly one graph, got {len(graphs)}")
    g = graphs[0]
    v: int | str = AUTO if args.v == "auto" else int(args.v)
    report = induction_split(g, args.t, v)
    subcase = proof_subcase(g, args.t)
    sys.stdout.write(
        f"n={g.n} t={report.t} v={report.v} subcase={subcase} "
        f"a_count={report.a_count} b_count={report.b_count} "
        f"nbhd_count={report.nbhd_count} gminus_count={report.gminus_count} "
        f"total={report.a_count + report.b_count}\n"
    )
    return 0


class SystemExit2(Exception):
    """Usage error; main converts to exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mismax",
        description="Count size-t maximal independent sets, build extremal "
        "graphs, and verify the q^(t-r)(q+1)^r bound.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="per-graph MIS size profiles")
    p.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.add_argument("--csv", action="store_true", help="tabular CSV output")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bound", help="bound decomposition table")
    p.add_argument("n", type=int)
    p.add_argument("t", help="single t or range like 1..6")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("extremal", help="emit an extremal construction")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--which", choices=["H", "turan"], default="H")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="verify the bound exhaustively or on a stream")
    p.add_argument("--n", type=int, default=None, help="exhaustive scan order")
    p.add_argument("--input", default=None, help="graph6 stream file or - for stdin")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--all-t", action="store_true")
    p.add_argument("--side", choices=["mis", "clique"], default="mis")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--n8-opt-in", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trace", help="A/B induction split diagnostics")
    p.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--v", default="auto", help="vertex index or 'auto'")
    p.set_defaults(func=cmd_trace)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CodecError, ValueError, SystemExit2, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
