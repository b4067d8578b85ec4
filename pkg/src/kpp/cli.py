"""Command line: ``kpp solve | bench | table | verify``.

Exit codes: 0 ok, 1 infeasible partition (verify), 2 unreadable input,
3 invalid k, 4 oracle size limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict

from .baselines import cover_and_cut, matching_then_join
from .builders import PathPartition, verify_partition
from .graph import GraphFormatError, parse_edge_list, parse_family, random_graph
from .matching import SizeLimitError
from .oracle import LIMITS, optimal_kpp
from .pipeline import ratio_table, solve

EXIT_OK, EXIT_INFEASIBLE, EXIT_PARSE, EXIT_BAD_K, EXIT_ORACLE = 0, 1, 2, 3, 4

BENCH_FIELDS = ["seed", "n", "m", "k", "alg_paths", "alg_edges", "oracle_paths",
                "oracle_edges", "ratio_paths", "ratio_edges"]


class UsageError(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


def _read_graph(path):
    try:
        with open(path) as fh:
            return parse_edge_list(fh.read())
    except (OSError, GraphFormatError) as exc:
        raise UsageError(EXIT_PARSE, f"cannot read graph {path}: {exc}")


def _check_k(k, minimum=1):
    if k < minimum:
        raise UsageError(EXIT_BAD_K, f"k must be at least {minimum}, got {k}")


def cmd_solve(args, out) -> int:
    _check_k(args.k)
    g = _read_graph(args.input)
    report = solve(g, args.k, args.tier, args.exact_threshold)
    data = report.to_dict()
    if args.verbose:
        data["guarantees"] = [x.to_dict() for x in report.guarantees]
        data["levels"] = [asdict(lv) for lv in report.counters_trace]
    if args.output == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(f"k={args.k} n={g.n} m={g.m} paths={report.paths} edges={report.edges} mode={report.mode}\n")
        for p in data["paths"]:
            out.write(" ".join(map(str, p)) + "\n")
    return EXIT_OK


def _ratio(a, b):
    if b == 0:
        return 1.0 if a == 0 else float("inf")
    return a / b


def cmd_bench(args, out) -> int:
    _check_k(args.k)
    try:
        family, params = parse_family(args.family)
    except ValueError as exc:
        raise UsageError(EXIT_PARSE, str(exc))
    if args.oracle and args.n > LIMITS.partition:
        raise UsageError(EXIT_ORACLE, f"oracle limited to n <= {LIMITS.partition}")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_FIELDS)
    ratios_p, ratios_e = [], []
    for t in range(args.trials):
        seed = args.seed + t
        try:
            g = random_graph(args.n, family, seed, **params)
        except ValueError as exc:
            raise UsageError(EXIT_PARSE, str(exc))
        if args.alg == "approx":
            pp = solve(g, args.k, args.tier, args.exact_threshold).partition
        elif args.alg == "cover_cut":
            pp = cover_and_cut(g, args.k, "heuristic")
        else:
            pp = matching_then_join(g, args.k)
        row = [seed, g.n, g.m, args.k, pp.num_paths, pp.num_edges, "", "", "", ""]
        if args.oracle:
            try:
                opt = optimal_kpp(g, args.k)
            except SizeLimitError as exc:
                raise UsageError(EXIT_ORACLE, str(exc))
            rp, re_ = _ratio(pp.num_paths, opt.num_paths), _ratio(pp.num_edges, opt.num_edges)
            ratios_p.append(rp)
            ratios_e.append(re_)
            row[6:] = [opt.num_paths, opt.num_edges, f"{rp:.6f}", f"{re_:.6f}"]
        writer.writerow(row)
    if args.trials and args.oracle:
        for label, agg in (("max", max), ("min", min), ("mean", lambda xs: sum(xs) / len(xs))):
            writer.writerow([label, "", "", args.k, "", "", "", "",
                             f"{agg(ratios_p):.6f}", f"{agg(ratios_e):.6f}"])
    return EXIT_OK


def cmd_table(args, out) -> int:
    rows = ratio_table(range(args.k_min, args.k_max + 1))
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "kppe_alpha", "kpp_ratio", "kpp_ratio_exact"])
        for rb in rows:
            writer.writerow([rb.k, f"{rb.alpha.to_decimal(5)}", str(rb.decimal), str(rb.exact)])
    else:
        out.write("k   ratio\n")
        for rb in rows:
            out.write(f"{rb.k:<3} {rb.decimal}\n")
    return EXIT_OK


def read_partition(path) -> PathPartition:
    """A partition file is either ``solve`` JSON output or one path per line."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(EXIT_PARSE, f"cannot read partition {path}: {exc}")
    try:
        data = json.loads(text)
        paths = data["paths"] if isinstance(data, dict) else data
        return PathPartition([tuple(int(v) for v in p) for p in paths], 0)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        pass
    paths = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            paths.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise UsageError(EXIT_PARSE, f"{path}:{lineno}: expected vertex ids")
    return PathPartition(paths, 0)


def cmd_verify(args, out) -> int:
    _check_k(args.k)
    g = _read_graph(args.graph)
    pp = read_partition(args.partition)
    issues = verify_partition(pp, g, args.k)
    for msg in issues:
        out.write(msg + "\n")
    if issues:
        return EXIT_INFEASIBLE
    out.write(f"ok: {pp.num_paths} paths, {pp.num_edges} edges\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kpp", description="Partition a graph into short paths.")
    sub = p.add_subparsers(dest="command", required=True)

    def tier_opts(sp):
        sp.add_argument("--tier", choices=["exact", "heuristic", "auto"], default="auto")
        sp.add_argument("--exact-threshold", type=int, default=None,
                        help="vertex cap for the exact cover tier (default: $KPP_EXACT_THRESHOLD or 14)")

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--input", required=True, help="edge-list file")
    s.add_argument("--output", choices=["json", "text"], default="json")
    s.add_argument("-v", "--verbose", action="store_true", help="include per-construction guarantees")
    tier_opts(s)
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="run seeded random trials, CSV output")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--family", default="gnp(0.3)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--oracle", action="store_true")
    b.add_argument("--alg", choices=["approx", "cover_cut", "matching_join"], default="approx")
    tier_opts(b)
    b.set_defaults(func=cmd_bench)

    t = sub.add_parser("table", help="path-count ratio per k")
    t.add_argument("--format", choices=["text", "csv"], default="text")
    t.add_argument("--k-min", type=int, default=9)
    t.add_argument("--k-max", type=int, default=18)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check a partition file against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--partition", required=True)
    v.add_argument("--k", type=int, required=True)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"kpp: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
