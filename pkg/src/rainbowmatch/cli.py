"""Command-line front end.

Subcommands: rb, table, oracle, construct, check, decompose, verify.
Exit codes: 0 success, 1 verification failure / counterexample found,
2 usage or parse error.  Computed rainbow numbers are cached in a JSON
file (--cache, env RAINBOW_CACHE, default ./rb_cache.json); cache writes
go through a temp file + rename so they are atomic at file granularity.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import __version__, antiramsey, gallai, rainbow
from .graphcore import FormatError, parse_coloring, parse_graph, serialize_coloring

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2


def _cache_path(args) -> Path:
    if getattr(args, "cache", None):
        return Path(args.cache)
    return Path(os.environ.get("RAINBOW_CACHE", "rb_cache.json"))


def _load_cache(path: Path) -> dict:
    if path.exists():
        try:
            return json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return {}
    return {}


def _store_cache(path: Path, cache: dict) -> None:
    fd, tmp = tempfile.mkstemp(dir=str(path.parent or "."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(cache, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cache_record(args, record: antiramsey.RbRecord) -> None:
    path = _cache_path(args)
    cache = _load_cache(path)
    cache[f"{record.n},{record.k}"] = {
        "record": record.to_dict(),
        "timestamp": time.time(),
        "version": __version__,
    }
    _store_cache(path, cache)


def cmd_rb(args) -> int:
    record = antiramsey.rb_formula(args.n, args.k)
    print(f"rb({args.n},{args.k}K2) = {record.rb}")
    print(f"f({args.n},{args.k}K2) = {record.f}")
    print(f"branch = {record.branch}")
    print(f"regime = {record.regime}")
    _cache_record(args, record)
    return EXIT_OK


def cmd_table(args) -> int:
    records = antiramsey.rb_table(args.k_max, args.n_max)
    text = (
        antiramsey.render_csv(records)
        if args.format == "csv"
        else antiramsey.render_json(records)
    )
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    result = antiramsey.exact_f_oracle(args.n, args.k, budget=args.budget)
    status = "exact" if result.exact else "budget exhausted (lower bound only)"
    print(f"f({args.n},{args.k}K2) = {result.f}  [{status}, {result.nodes} nodes]")
    if args.cert:
        Path(args.cert).write_text(serialize_coloring(result.certificate))
        print(f"certificate written to {args.cert}")
    return EXIT_OK if result.exact else EXIT_VERIFY_FAIL


def cmd_construct(args) -> int:
    gc = rainbow.lower_bound_coloring(args.n, args.k)
    col = gc.to_coloring()
    Path(args.out).write_text(serialize_coloring(col))
    sidecar = Path(args.out).with_suffix(Path(args.out).suffix + ".json")
    sidecar.write_text(gc.sidecar_json() + "\n")
    print(f"{gc.kind} coloring of K_{args.n} with {col.c} colors -> {args.out}")
    return EXIT_OK


def cmd_check(args) -> int:
    col = parse_coloring(Path(args.coloring).read_text())
    result = rainbow.max_rainbow_matching(col)
    edges = " ".join(f"{u}-{v}" for u, v in sorted(result.witness.edges))
    if result.size >= args.k:
        print(f"max rainbow matching {result.size}; contains rainbow {args.k}K2")
    else:
        print(f"max rainbow matching {result.size}; no rainbow {args.k}K2")
    print(f"witness: {edges}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = parse_graph(Path(args.graph).read_text())
    dec = gallai.decompose(g)
    report = gallai.verify_structure(g, dec)
    out = {"decomposition": dec.to_dict(), "structure": report.to_dict()}
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAIL


def cmd_verify(args) -> int:
    failures = []
    records = []
    for record in antiramsey.rb_table(args.k_max, args.n_max):
        n, k = record.n, record.k
        if k < 2:
            records.append(record)
            continue
        ok = antiramsey.verify_lower_bound(n, k)
        record = antiramsey.mark_verified(record, lower_checked=ok)
        if not ok:
            failures.append((n, k, "lower bound"))
        if args.trials > 0 and record.rb <= n * (n - 1) // 2:
            sampled = antiramsey.verify_upper_bound_sampled(n, k, args.trials, args.seed)
            record = antiramsey.mark_verified(record, upper_sampled=sampled.ok)
            if not sampled.ok:
                path = f"counterexample_{n}_{k}.col"
                Path(path).write_text(
                    serialize_coloring(sampled.first_counterexample)
                )
                failures.append((n, k, f"upper bound; counterexample in {path}"))
        records.append(record)
        _cache_record(args, record)
    print(f"verified {len(records)} records, {len(failures)} failures")
    for n, k, what in failures:
        print(f"FAIL n={n} k={k}: {what}")
    return EXIT_VERIFY_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbmatch",
        description="Rainbow numbers of matchings: formulas, certificates, oracles.",
    )
    parser.add_argument("--cache", help="path of the JSON results cache")
    parser.add_argument(
        "--threads", type=int, default=0, help="worker threads (0 = auto)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rb", help="closed-form rb(n,kK2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_rb)

    p = sub.add_parser("table", help="rb table over a parameter grid")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="exhaustive f(n,kK2) with certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=antiramsey.DEFAULT_ORACLE_BUDGET)
    p.add_argument("--cert", help="write the attaining coloring here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("construct", help="write the extremal lower-bound coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="max rainbow matching of a coloring file")
    p.add_argument("--coloring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="Gallai-Edmonds decomposition of a graph file")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="lower-bound + sampled upper-bound sweep")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads > 0:
        try:
            import numba

            numba.set_num_threads(args.threads)
        except ImportError:
            pass
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
