"""Command-line front end.

Subcommands: count, completion, enumerate, verify, table.  Output formats
are json (an envelope {query, result, provenance} with the volatile
provenance segregated from the data sections), csv (data rows only) and
text.  Exit codes: 0 success / all grid points match, 1 usage error,
2 verification mismatch, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone

from . import __version__, counters
from .alcove import enumerate_regular_weights
from .completion import InvariantViolation, candidate_primes, completion_profile
from .crosscheck import CrossCheckReport, RunConfig, run_crosscheck
from .root_systems import LieType, build_root_system


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit remapped from 2 to 1 (2 means mismatch here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="verlinde", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, prime=False, engine=False, grid=False):
        if grid:
            p.add_argument("--types", help="comma-separated list, e.g. A1,B2,E8 (overrides --type/--rank)")
        p.add_argument("--type", help="series letter A..G")
        p.add_argument("--rank", type=int, help="rank of the type")
        if grid:
            p.add_argument("--level", type=int, help="single level (shorthand for min = max)")
            p.add_argument("--level-min", type=int)
            p.add_argument("--level-max", type=int)
            p.add_argument("--prime", type=int, action="append",
                           help="explicit prime (repeatable); default scans candidate primes")
        else:
            p.add_argument("--level", type=int, required=True)
        if prime:
            p.add_argument("--prime", type=int, required=True)
        if engine:
            p.add_argument("--engine", choices=("oracle", "formula"), default="formula")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--e6e7-reading", choices=counters.READINGS, default="literal",
                       dest="reading")

    p_count = sub.add_parser("count", help="one multiplicity N(type, m, p)")
    common(p_count, prime=True, engine=True)
    p_count.set_defaults(func=cmd_count)

    p_completion = sub.add_parser("completion", help="full completion profile at one level")
    common(p_completion)
    p_completion.set_defaults(func=cmd_completion)

    p_enum = sub.add_parser("enumerate", help="regular weights at one level")
    common(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="oracle vs formula sweep; exit 2 on any mismatch")
    common(p_verify, grid=True)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="grid of counts, one row per (type, level, prime, engine)")
    common(p_table, grid=True)
    p_table.add_argument("--engine", choices=("oracle", "formula", "both"), default="both")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def cmd_count(args) -> int:
    lie_type = _single_type(args)
    rs = build_root_system(lie_type)
    if args.engine == "oracle":
        value = completion_profile(rs, args.level).counts.get(args.prime, 0)
    else:
        value = counters.count(lie_type, args.level, args.prime, args.reading)
    query = _query(args, type=str(lie_type), level=args.level, prime=args.prime, engine=args.engine)
    rows = [{"type": lie_type.series, "rank": lie_type.rank, "level": args.level,
             "prime": args.prime, "engine": args.engine, "count": value}]
    _emit(args, query, {"count": value}, rows, [str(value)])
    return 0


def cmd_completion(args) -> int:
    lie_type = _single_type(args)
    rs = build_root_system(lie_type)
    profile = completion_profile(rs, args.level)
    result = {
        "completion": {str(p): k for p, k in profile.counts.items()},
        "rendered": profile.rendered(),
        "regular_total": profile.regular_total,
        "unclassified": profile.unclassified,
    }
    rows = [{"type": lie_type.series, "rank": lie_type.rank, "level": args.level,
             "prime": p, "count": k, "regular_total": profile.regular_total,
             "unclassified": profile.unclassified}
            for p, k in profile.counts.items()]
    text = [f"{lie_type} level {args.level}: {profile.rendered()}",
            f"regular weights: {profile.regular_total}, unclassified: {profile.unclassified}",
            json.dumps(result["completion"])]
    _emit(args, _query(args, type=str(lie_type), level=args.level), result, rows, text)
    return 0


def cmd_enumerate(args) -> int:
    lie_type = _single_type(args)
    rs = build_root_system(lie_type)
    regular = enumerate_regular_weights(rs, args.level)
    result = {"count": len(regular), "weights": [list(w) for w in regular]}
    rows = [{f"c{i + 1}": c for i, c in enumerate(w)} for w in regular]
    text = [json.dumps(list(w)) for w in regular] or ["[]"]
    _emit(args, _query(args, type=str(lie_type), level=args.level), result, rows, text)
    return 0


def cmd_verify(args) -> int:
    report = run_crosscheck(_grid_config(args))
    result = _report_result(report)
    rows = [_entry_row(e) for e in report.entries]
    text = [_entry_line(e) for e in report.entries if not e.match]
    text.append(f"checked {len(report.entries)} grid points, {len(report.mismatches)} mismatches "
                f"(reading: {report.config.reading})")
    _emit(args, _query(args, types=[str(t) for t in report.config.types],
                       level_min=report.config.level_min, level_max=report.config.level_max,
                       primes=list(report.config.primes) if report.config.primes else "candidate"),
          result, rows, text)
    return 0 if report.ok else 2


def cmd_table(args) -> int:
    config = _grid_config(args)
    engines = ("oracle", "formula") if args.engine == "both" else (args.engine,)
    rows = []
    for lie_type in config.types:
        rs = build_root_system(lie_type)
        for m in config.levels():
            profile = completion_profile(rs, m) if "oracle" in engines else None
            primes = sorted(config.primes) if config.primes else \
                sorted(set(candidate_primes(rs, m)) | set(profile.counts if profile else ()))
            for p in primes:
                for engine in engines:
                    value = profile.counts.get(p, 0) if engine == "oracle" else \
                        counters.count(lie_type, m, p, config.reading)
                    rows.append({"type": lie_type.series, "rank": lie_type.rank, "level": m,
                                 "prime": p, "engine": engine, "count": value})
    text = [" ".join(f"{k}={v}" for k, v in row.items()) for row in rows]
    _emit(args, _query(args, types=[str(t) for t in config.types],
                       level_min=config.level_min, level_max=config.level_max,
                       engine=args.engine),
          {"rows": rows}, rows, text)
    return 0


def _single_type(args) -> LieType:
    if not args.type or args.rank is None:
        raise ValueError("--type and --rank are required")
    return LieType(args.type.upper(), args.rank)


def _grid_config(args) -> RunConfig:
    if args.types:
        types = tuple(LieType.parse(t) for t in args.types.split(","))
    else:
        types = (_single_type(args),)
    if args.level is not None:
        lo = hi = args.level
    else:
        lo, hi = args.level_min, args.level_max
    if lo is None or hi is None:
        raise ValueError("need --level or both --level-min and --level-max")
    primes = tuple(args.prime) if args.prime else None
    return RunConfig(types=types, level_min=lo, level_max=hi, primes=primes, reading=args.reading)


def _report_result(report: CrossCheckReport) -> dict:
    return {
        "entries": [_entry_row(e) for e in report.entries],
        "summary": {
            "entries": len(report.entries),
            "mismatches": len(report.mismatches),
            "reading": report.config.reading,
        },
    }


def _entry_row(e) -> dict:
    return {"type": e.lie_type.series, "rank": e.lie_type.rank, "level": e.level,
            "prime": e.prime, "oracle_count": e.oracle_count, "formula_count": e.formula_count,
            "match": e.match, "reading_sensitive": e.reading_sensitive}


def _entry_line(e) -> str:
    flag = " [reading-sensitive]" if e.reading_sensitive else ""
    return (f"MISMATCH {e.lie_type} level {e.level} p={e.prime}: "
            f"oracle {e.oracle_count} vs formula {e.formula_count}{flag}")


def _query(args, **fields) -> dict:
    return {"command": args.command, **fields}


def _emit(args, query: dict, result: dict, rows: list[dict], text_lines: list[str]) -> None:
    if args.format == "json":
        payload = {
            "query": query,
            "result": result,
            "provenance": {
                "tool": "verlinde",
                "version": __version__,
                "timestamp": datetime.now(timezone.utc).isoformat(),
            },
        }
        body = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        body = buf.getvalue()
    else:
        body = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


if __name__ == "__main__":
    sys.exit(main())
