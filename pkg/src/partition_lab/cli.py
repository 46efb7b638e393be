"""Command line entry point: compute, table, verify, qbinom, bench.

Exit status: 0 success, 1 verification failure or method disagreement,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from math import isqrt

from . import reference
from .classic import (
    CacheParseError,
    build_table,
    cached_table,
    hr_leading_estimate,
    resolve_cache_path,
)
from .levels import index_vectors, level_table, p_combinatorial, s_inner
from .partitions import LIMITS, CapExceededError, PartitionConstraint, iter_partitions, iter_restricted
from .qbinomial import coefficient_witnesses, qbinom
from .suites import SUITES

METHODS = ("bruteforce", "euler", "combinatorial", "estimate")
FORMATS = ("text", "json", "csv")
TABLE_MAX = 10000
DETAIL_AUTO_MAX = 30


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    max_n: int | None = None
    max_k: int | None = None
    method: str = "euler"
    output_format: str = "text"
    cache_path: str | None = None
    parallel: bool = False
    check: bool = False
    suites: tuple[str, ...] = ()
    witness: int | None = None
    k: int | None = None
    detail: bool | None = None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _emit_csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _euler_table(cfg: RunConfig, max_n: int):
    return cached_table(max_n, resolve_cache_path(cfg.cache_path))


# ---------------------------------------------------------------------------


def _p_by(method: str, n: int, cfg: RunConfig) -> int:
    if method == "euler":
        return _euler_table(cfg, n)[n]
    if method == "combinatorial":
        return p_combinatorial(n, parallel=cfg.parallel).total
    if method == "bruteforce":
        return sum(1 for _ in iter_partitions(n))
    raise UsageError(f"method {method!r} gives no exact value")


def run_compute(cfg: RunConfig, out) -> int:
    n = cfg.n
    if n is None:
        raise UsageError("compute needs --n")
    if cfg.method == "estimate" and n < 1:
        raise UsageError("the estimate method needs n >= 1")
    if cfg.method == "bruteforce" and n > LIMITS.enumeration_cap:
        raise UsageError(f"bruteforce is capped at n={LIMITS.enumeration_cap}")

    if cfg.method == "estimate":
        rep = hr_leading_estimate(n)
        record = {"n": n, "method": "estimate", "lambda_n": rep.lambda_n,
                  "estimate": rep.estimate, "rounded": str(rep.rounded)}
        if cfg.output_format == "json":
            out.write(json.dumps(record) + "\n")
        elif cfg.output_format == "csv":
            out.write(_emit_csv([["n", "method", "estimate", "rounded"], [n, "estimate", repr(rep.estimate), rep.rounded]]))
        else:
            out.write(f"p({n}) ~ {rep.estimate!r} (rounded {rep.rounded}, lambda_n = {rep.lambda_n!r})\n")
        return 0

    breakdown = None
    if cfg.method == "combinatorial":
        breakdown = p_combinatorial(n, parallel=cfg.parallel)
        value = breakdown.total
    else:
        value = _p_by(cfg.method, n, cfg)

    status = 0
    if cfg.check:
        others = ["euler", "combinatorial"]
        if n <= LIMITS.enumeration_cap:
            others.append("bruteforce")
        for other in others:
            if other == cfg.method:
                continue
            v = _p_by(other, n, cfg)
            if v != value:
                print(f"check failed: p({n}) is {value} by {cfg.method} but {v} by {other}", file=sys.stderr)
                status = 1

    if cfg.output_format == "json":
        record = {"n": n, "method": cfg.method, "p": str(value)}
        if breakdown is not None:
            record.update(breakdown.to_dict())
        out.write(json.dumps(record) + "\n")
    elif cfg.output_format == "csv":
        header, row = ["n", "method", "p"], [n, cfg.method, value]
        if breakdown is not None:
            for k, v in breakdown.per_level.items():
                header.append(f"S_{k}")
                row.append(v)
        out.write(_emit_csv([header, row]))
    else:
        out.write(f"p({n}) = {value}\n")
        if breakdown is not None:
            if breakdown.by_convention:
                out.write("  (no levels; p(0) = 1 by convention)\n")
            for k, v in breakdown.per_level.items():
                out.write(f"  S_{k} = {v}\n")
    return status


def _table_columns(max_n: int, detail: bool) -> list[tuple[str, int, tuple | None]]:
    cols = []
    for k in range(1, isqrt(max_n) + 1):
        cols.append((f"S_{k}", k, None))
        if detail and k >= 3:
            for v in index_vectors(k, max_n):
                cols.append((f"S_{v.label()}", k, v.a))
    return cols


def build_level_rows(max_n: int, detail: bool) -> tuple[list[str], list[list[int]]]:
    """Header and integer rows (n = 1..max_n) of the level table."""
    levels = level_table(max_n)
    cols = _table_columns(max_n, detail)
    header = ["n"] + [c[0] for c in cols] + ["p"]
    rows = []
    for n in range(1, max_n + 1):
        row = [n]
        for _, k, idx in cols:
            row.append(levels[k][n] if idx is None else s_inner(k, n, idx))
        row.append(sum(levels[k][n] for k in levels))
        rows.append(row)
    return header, rows


def run_table(cfg: RunConfig, out) -> int:
    max_n = cfg.max_n
    if max_n is None:
        raise UsageError("table needs --max-n")
    if max_n > TABLE_MAX:
        raise UsageError(f"table is capped at --max-n {TABLE_MAX}")
    detail = cfg.detail if cfg.detail is not None else max_n <= DETAIL_AUTO_MAX
    header, rows = build_level_rows(max_n, detail)
    euler = _euler_table(cfg, max_n)
    bad = [r[0] for r in rows if r[-1] != euler[r[0]]]
    if cfg.output_format == "csv":
        out.write(_emit_csv([header] + rows))
    elif cfg.output_format == "json":
        out.write(json.dumps([dict(zip(header, map(str, r))) for r in rows]) + "\n")
    else:
        cells = [header] + [[str(r[0])] + [str(x) if x else "" for x in r[1:-1]] + [str(r[-1])] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        for row in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    if bad:
        print(f"level sums disagree with the Euler table at n={bad[0]}", file=sys.stderr)
        return 1
    return 0


def run_verify(cfg: RunConfig, out) -> int:
    max_n = 60 if cfg.max_n is None else cfg.max_n
    names = cfg.suites or tuple(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)}")
    status = 0
    results = []
    for name in names:
        res = SUITES[name](max_n)
        results.append(res)
        if cfg.output_format == "text":
            out.write(res.line() + "\n")
            for row in res.rows:
                out.write(row + "\n")
        if res.gating and not res.ok:
            status = 1
    if cfg.output_format == "json":
        out.write(json.dumps([
            {"suite": r.name, "ok": r.ok, "gating": r.gating, "checks": r.checks,
             "counterexample": r.counterexample, "rows": r.rows}
            for r in results
        ]) + "\n")
    elif cfg.output_format == "csv":
        out.write(_emit_csv([["suite", "ok", "gating", "checks", "counterexample"]]
                            + [[r.name, r.ok, r.gating, r.checks, r.counterexample or ""] for r in results]))
    return status


def run_qbinom(cfg: RunConfig, out) -> int:
    if cfg.n is None or cfg.k is None:
        raise UsageError("qbinom needs --n and --k")
    n, k = cfg.n, cfg.k
    poly = qbinom(n, k)
    record = {"n": n, "k": k, "coeffs": [str(c) for c in poly.coeffs]}
    if cfg.witness is not None:
        r = cfg.witness
        if n > 40:
            raise UsageError("--witness is limited to n <= 40")
        classical = list(iter_restricted(r, PartitionConstraint.box(n - k, k), cap=max(r, 60))) if k <= n else []
        new = coefficient_witnesses(n, k, r)
        record["witness"] = {
            "r": r,
            "coefficient": str(poly.coeff(r)),
            "classical": [p.to_digits() for p in classical],
            "new": [p.to_digits() for p in new],
        }
    if cfg.output_format == "json":
        out.write(json.dumps(record) + "\n")
    elif cfg.output_format == "csv":
        out.write(_emit_csv([["exponent", "coefficient"]] + [[i, c] for i, c in enumerate(poly.coeffs)]))
    else:
        out.write(f"[{n} {k}] = {poly}\n")
        out.write("coefficients: " + " ".join(map(str, poly.coeffs)) + "\n")
        if "witness" in record:
            w = record["witness"]
            out.write(f"q^{r}: coefficient {w['coefficient']}\n")
            out.write(f"  partitions of {r}, at most {n - k} parts each <= {k}: {' '.join(w['classical']) or '-'}\n")
            out.write(f"  partitions of {n + 1 + r}, {n - k + 1} parts, largest {k + 1}: {' '.join(w['new']) or '-'}\n")
    return 0


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, (time.perf_counter() - t0) * 1000.0


def run_bench(cfg: RunConfig, out) -> int:
    max_n = 1000 if cfg.max_n is None else cfg.max_n
    max_k = 10 if cfg.max_k is None else cfg.max_k
    records = []
    status = 0
    table, ms = _timed(lambda: build_table(max_n))
    for n, v in reference.P_VALUES.items():
        if n <= max_n and table[n] != v:
            print(f"bench: Euler table gives p({n}) = {table[n]}, expected {v}; timings discarded", file=sys.stderr)
            return 1
    records.append({"task": "euler_table", "n": max_n, "millis": ms})
    seq, ms = _timed(lambda: p_combinatorial(max_n))
    records.append({"task": "combinatorial", "n": max_n, "millis": ms})
    if seq.total != table[max_n]:
        print(f"bench: level sum {seq.total} != p({max_n}) = {table[max_n]}", file=sys.stderr)
        status = 1
    if cfg.parallel:
        par, ms = _timed(lambda: p_combinatorial(max_n, parallel=True))
        records.append({"task": "combinatorial_parallel", "n": max_n, "millis": ms})
        if par != seq:
            print("bench: parallel and sequential breakdowns differ", file=sys.stderr)
            status = 1
    _, ms = _timed(lambda: qbinom(2 * max_k, max_k))
    records.append({"task": "qbinom", "n": 2 * max_k, "millis": ms})
    if cfg.output_format == "json":
        out.write(json.dumps(records) + "\n")
    elif cfg.output_format == "csv":
        out.write(_emit_csv([["task", "n", "millis"]] + [[r["task"], r["n"], f"{r['millis']:.3f}"] for r in records]))
    else:
        for r in records:
            out.write(f"{r['task']:<24} n={r['n']:<6} {r['millis']:10.3f} ms\n")
    return status


RUNNERS = {
    "compute": run_compute,
    "table": run_table,
    "verify": run_verify,
    "qbinom": run_qbinom,
    "bench": run_bench,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    common.add_argument("--cache", metavar="PATH", help="partition table cache file")

    parser = argparse.ArgumentParser(prog="partition-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compute", parents=[common], help="p(n) by one method")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=METHODS, default="euler")
    p.add_argument("--check", action="store_true", help="cross-check against the other exact methods")
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser("table", parents=[common], help="level counts S_k(n) and p(n)")
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--detail", action=argparse.BooleanOptionalAction, default=None,
                   help="include one column per index vector (default: on for max-n <= 30)")

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("suite", nargs="*", help="suite names (default: all)")
    p.add_argument("--suite", action="append", default=[], dest="suite_flags", metavar="NAME")
    p.add_argument("--max-n", type=_nonneg, default=60)

    p = sub.add_parser("qbinom", parents=[common], help="Gaussian polynomial [n k]")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--witness", type=_nonneg, metavar="R")

    p = sub.add_parser("bench", parents=[common], help="timings")
    p.add_argument("--max-n", type=_nonneg, default=1000)
    p.add_argument("--max-k", type=_nonneg, default=10)
    p.add_argument("--parallel", action="store_true")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    suites = tuple(getattr(ns, "suite", []) or []) + tuple(getattr(ns, "suite_flags", []) or [])
    return RunConfig(
        subcommand=ns.subcommand,
        n=getattr(ns, "n", None),
        max_n=getattr(ns, "max_n", None),
        max_k=getattr(ns, "max_k", None),
        method=getattr(ns, "method", "euler"),
        output_format=ns.output_format,
        cache_path=ns.cache,
        parallel=getattr(ns, "parallel", False),
        check=getattr(ns, "check", False),
        suites=suites,
        witness=getattr(ns, "witness", None),
        k=getattr(ns, "k", None),
        detail=getattr(ns, "detail", None),
    )


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        return RUNNERS[cfg.subcommand](cfg, out)
    except (UsageError, CapExceededError) as exc:
        parser.print_usage(sys.stderr)
        print(f"partition-lab: error: {exc}", file=sys.stderr)
        return 2
    except CacheParseError as exc:
        print(f"partition-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
