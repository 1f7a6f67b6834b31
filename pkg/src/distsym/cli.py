"""Command-line front end.

Subcommands: chartable, xi, cells, distinguished, oracle, verify.  Output
defaults to plain text tables; --json switches to the documented schemas.
All numbers print exactly (integers, or a/b for rationals).  The
environment variable DISTSYM_MAX_RANK (default 12) caps the symbol rank a
command may touch, guarding accidental blow-ups.

Exit codes: 0 success, 1 internal model violation (the offending object is
serialized to stderr), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cells as cells_mod
from . import oracle as oracle_mod
from .cells import FamilyModelViolation
from .symbols import cuspidal_symbol, symbol_sort_key
from .verify import run_verification
from .wchar import bipartitions, character_table
from .xi import CoefficientViolation, RouteDisagreement, xi_all
from .xi import xi as xi_fn

DEFAULT_MAX_RANK = 12


def _max_rank() -> int:
    raw = os.environ.get("DISTSYM_MAX_RANK")
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"DISTSYM_MAX_RANK must be an integer, got {raw!r}")


def _check_rank(parser: argparse.ArgumentParser, rank: int, what: str) -> None:
    cap = _max_rank()
    if rank > cap:
        parser.error(
            f"{what} needs rank {rank}, above the cap {cap}; "
            f"raise DISTSYM_MAX_RANK to override"
        )


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _fmt(value) -> str:
    return str(value)


def _cmd_chartable(args, parser) -> int:
    n = args.n
    _check_rank(parser, n, f"chartable {n}")
    classes = bipartitions(n)
    table = character_table(n)
    if args.json:
        payload = {
            "n": n,
            "classes": [str(c) for c in classes],
            "rows": {
                str(bp): {str(c): char.at(c) for c in classes}
                for bp, char in table.items()
            },
        }
        _emit_json(payload)
        return 0
    keys = [str(c) for c in classes]
    width = max(len(k) for k in keys) + 2
    head = max(len(str(bp)) for bp in table) + 2
    print(" " * head + "".join(k.rjust(width) for k in keys))
    for bp, char in table.items():
        row = "".join(_fmt(char.at(c)).rjust(width) for c in classes)
        print(str(bp).ljust(head) + row)
    return 0


def _xi_payload(result) -> dict:
    return {
        "route": result.route,
        "character": {str(c): result.character.at(c) for c in bipartitions(2 * result.n)},
        "decomposition": {str(bp): coeff for bp, coeff in result.decomposition.items()},
    }


def _cmd_xi(args, parser) -> int:
    n = args.n
    _check_rank(parser, 2 * n, f"xi {n}")
    route = args.route.upper()
    if route == "ALL":
        results = xi_all(n)
        agreement = {"agree": True, "routes_compared": ["A", "B", "C"]}
        shown = {name: _xi_payload(r) for name, r in results.items()}
        base = results["A"]
    else:
        base = xi_fn(n, route)
        agreement = {"agree": True, "routes_compared": [route]}
        shown = {route: _xi_payload(base)}
    if args.json:
        _emit_json({"n": n, "routes": shown, "agreement": agreement})
        return 0
    print(f"xi_{n} on W_{2 * n}  (routes: {', '.join(agreement['routes_compared'])}, agree: yes)")
    print("character:")
    for c in bipartitions(2 * n):
        print(f"  {str(c):<16} {base.character.at(c)}")
    print("decomposition:")
    for bp, coeff in base.decomposition.items():
        print(f"  {'+' if coeff > 0 else '-'} {bp}")
    return 0


def _rank_payload(rank: int) -> dict:
    entries = cells_mod.cell_entries_of_rank(rank)
    merged = set()
    count = 0
    for e in entries:
        merged.update(e.constituents)
        count += 2**e.d
    union = sorted(merged, key=symbol_sort_key)
    cusp_d = next((d for d in range(rank + 1) if d * d + d == rank), None)
    present = cusp_d is not None and cuspidal_symbol(cusp_d) in merged
    return {
        "rank": rank,
        "cells": [e.to_json() for e in entries],
        "union": [str(s) for s in union],
        "count": count,
        "cuspidal_present": present,
    }


def _print_rank_report(payload: dict) -> None:
    print(f"rank {payload['rank']}: {len(payload['cells'])} cells, "
          f"{payload['count']} distinguished symbols, "
          f"cuspidal {'present' if payload['cuspidal_present'] else 'absent'}")
    for entry in payload["cells"]:
        terms = " ".join(
            f"{'+' if t['sign'] > 0 else '-'}({t['symbol']})" for t in entry["terms"]
        )
        print(f"  Z = {entry['Z']}  (d = {entry['d']})")
        print(f"    cell: {terms}")
        print(f"    constituents: {', '.join(entry['constituents'])}")
    print(f"  union: {', '.join(payload['union'])}")


def _cmd_cells(args, parser) -> int:
    _check_rank(parser, args.rank, f"cells --rank {args.rank}")
    payload = _rank_payload(args.rank)
    if args.json:
        _emit_json(payload)
    else:
        _print_rank_report(payload)
    return 0


def _cmd_distinguished(args, parser) -> int:
    _check_rank(parser, 2 * args.n, f"distinguished --n {args.n}")
    report = cells_mod.distinguished(args.n)
    if args.json:
        _emit_json(report.to_json())
    else:
        _print_rank_report(report.to_json())
    return 0


def _cmd_oracle(args, parser) -> int:
    rows = oracle_mod.verify_claims(max_n=args.max_n, include_w6=args.include_w6)
    if args.json:
        _emit_json(
            {"checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in rows]}
        )
    else:
        for name, ok, detail in rows:
            print(f"{'PASS' if ok else 'FAIL'}  {name}  [{detail}]")
    return 0 if all(ok for _, ok, _ in rows) else 1


def _cmd_verify(args, parser) -> int:
    report = run_verification()
    if args.json:
        _emit_json(report.to_json())
    else:
        for c in report.checks:
            tag = {"pass": "PASS", "fail": "FAIL"}.get(c.status, "NOTED")
            print(f"{tag}  {c.name}  [{c.detail}]")
        passed = sum(1 for c in report.checks if c.status == "pass")
        noted = sum(1 for c in report.checks if c.status == "discrepancy-documented")
        failed = sum(1 for c in report.checks if c.status == "fail")
        print(f"{passed} passed, {noted} documented discrepancies, {failed} failed")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distsym",
        description="Exact character arithmetic and distinguished Lusztig symbols "
        "for the symplectic symmetric space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="character table of W_n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_chartable)

    p = sub.add_parser("xi", help="the virtual module at parameter n")
    p.add_argument("n", type=int)
    p.add_argument("--route", default="all", choices=["A", "B", "C", "all"])
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--format",
        choices=["table", "json"],
        help="table (default) or json; --format=json equals --json",
    )
    p.set_defaults(fn=_cmd_xi)

    p = sub.add_parser("cells", help="cells of the even-strip special symbols")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_cells)

    p = sub.add_parser("distinguished", help="distinguished symbols at rank 2n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_distinguished)

    p_oracle = sub.add_parser("oracle", help="brute-force group checks")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p = oracle_sub.add_parser("verify", help="run all oracle claims")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--include-w6", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="run the reference fixture suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) == "json":
        args.json = True
    try:
        return args.fn(args, parser)
    except (RouteDisagreement, FamilyModelViolation, CoefficientViolation) as exc:
        print(json.dumps({"error": type(exc).__name__, **exc.payload}), file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
