"""Command-line front end.

Subcommands: ``table`` prints drop-count tables, ``gf`` synthesizes and
expands generating functions (with an optional JSON cache), ``generic``
lists or counts relative rook configurations, ``siteswap`` exposes the
pattern tools, and ``verify`` runs the cross-validation suites.

Exit codes: 0 success, 1 verification or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .algebra import Polynomial, RationalFunction
from .generic_gf import enumerate_generic, gf_total
from .juggling import (
    ball_count,
    complement,
    is_minimal,
    is_valid,
    parse_pattern,
    pattern_text,
    pattern_to_placement,
    placement_to_pattern,
    scale_pattern,
    shift_pattern,
)
from .placements import (
    RookPlacement,
    count_by_drops,
    drops,
    enumerate_placements,
    min_diagonal_multiplicity,
    symmetry_map,
)
from .reference import EULERIAN_TABLES, GF_CLOSED_FORMS, GF_SERIES

CACHE_ENV_VAR = "EULERIAN_ROOKS_CACHE"


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerian-rooks",
        description="Generalized Eulerian numbers: tables, generating "
        "functions, rook/siteswap tools and verification suites.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print drop-count tables")
    p_table.add_argument("--cap", type=positive_int, required=True)
    p_table.add_argument("--max-n", type=positive_int, required=True)
    p_table.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p_gf = sub.add_parser("gf", help="synthesize a generating function")
    p_gf.add_argument("--cap", type=positive_int, required=True)
    p_gf.add_argument("--drops", type=non_negative_int, required=True)
    p_gf.add_argument("--expand", type=non_negative_int, metavar="N",
                      help="also print series coefficients up to x^N")
    p_gf.add_argument("--format", choices=["text", "json"], default="text")
    p_gf.add_argument("--cache", metavar="PATH",
                      help=f"JSON cache file (default: ${CACHE_ENV_VAR})")
    p_gf.add_argument("--workers", type=positive_int)

    p_gen = sub.add_parser("generic", help="enumerate relative configurations")
    p_gen.add_argument("--drops", type=non_negative_int, required=True)
    p_gen.add_argument("--cap", type=positive_int, required=True)
    p_gen.add_argument("--count-only", action="store_true")
    p_gen.add_argument("--format", choices=["text", "json"], default="text")

    p_sw = sub.add_parser("siteswap", help="pattern tools")
    p_sw.add_argument(
        "action",
        choices=["validate", "to-board", "from-board", "complement", "scale", "shift"],
    )
    p_sw.add_argument("operand", help="pattern text, or a digit grid "
                      "(rows joined by '/', or '-' for stdin) for from-board")
    p_sw.add_argument("--cap", type=positive_int,
                      help="expected hand capacity, disambiguates parsing")
    p_sw.add_argument("--alpha", type=int, help="scale factor (coprime to the period)")
    p_sw.add_argument("--beta", type=int, help="shift amount")
    p_sw.add_argument("--format", choices=["text", "json"], default="text")

    p_ver = sub.add_parser("verify", help="run cross-validation suites")
    p_ver.add_argument(
        "--suite",
        choices=["all", "symmetry", "recurrence", "bijection", "gf", "boundc", "tables"],
        default="all",
    )
    p_ver.add_argument("--max-n", type=positive_int)
    p_ver.add_argument("--workers", type=positive_int)
    return parser


# ---------------------------------------------------------------------------
# table


def cmd_table(args: argparse.Namespace) -> int:
    rows = [count_by_drops(n, args.cap) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        print(json.dumps([{"n": d.n, "counts": list(d.counts)} for d in rows]))
    elif args.format == "csv":
        print("n,k,value")
        for d in rows:
            for n, k, v in d.to_csv_rows():
                print(f"{n},{k},{v}")
    else:
        width = len(f"n={args.max_n}")
        for d in rows:
            print(f"{f'n={d.n}':<{width}}  " + " ".join(str(v) for v in d.counts))
    return 0


# ---------------------------------------------------------------------------
# gf, with cache


def _load_cache(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return {"version": __version__, "entries": {}}
    if data.get("version") != __version__:
        return {"version": __version__, "entries": {}}
    return data


def _cached_gf(k: int, cap: int, path: str | None, workers: int | None) -> RationalFunction:
    if path is None:
        return gf_total(k, cap, workers=workers)
    cache = _load_cache(path)
    key = f"{k},{cap}"
    entry = cache["entries"].get(key)
    if entry is not None:
        return RationalFunction(
            Polynomial(entry["numerator"]), Polynomial(entry["denominator"])
        )
    gf = gf_total(k, cap, workers=workers)
    cache["entries"][key] = gf.to_coeff_dict()
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cache, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return gf


def cmd_gf(args: argparse.Namespace) -> int:
    if args.drops > 3:
        print(
            f"warning: no stored closed form for drops={args.drops}; "
            "computing from scratch without a golden cross-check",
            file=sys.stderr,
        )
    if args.drops == 0:
        print(
            "note: the constant term counts the empty board (n = 0)",
            file=sys.stderr,
        )
    cache_path = args.cache or os.environ.get(CACHE_ENV_VAR)
    gf = _cached_gf(args.drops, args.cap, cache_path, args.workers)
    series = gf.series(args.expand) if args.expand is not None else None
    if args.format == "json":
        payload = {"k": args.drops, "cap": args.cap, **gf.to_coeff_dict()}
        if series is not None:
            payload["series"] = series
        print(json.dumps(payload))
    else:
        print(gf.to_text())
        if series is not None:
            print(",".join(str(c) for c in series))
    return 0


# ---------------------------------------------------------------------------
# generic


def cmd_generic(args: argparse.Namespace) -> int:
    stream = enumerate_generic(args.drops, args.cap)
    if args.count_only:
        count = sum(1 for _ in stream)
        print(json.dumps({"k": args.drops, "cap": args.cap, "count": count})
              if args.format == "json" else count)
        return 0
    if args.format == "json":
        print(json.dumps(
            {"k": args.drops, "cap": args.cap, "placements": [g.to_text() for g in stream]}
        ))
    else:
        for g in stream:
            print(g.to_text())
    return 0


# ---------------------------------------------------------------------------
# siteswap


def _read_board(operand: str) -> RookPlacement:
    if operand == "-":
        text = sys.stdin.read()
    else:
        text = operand.replace("/", "\n")
    return RookPlacement.from_text(text)


def cmd_siteswap(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    if args.action == "from-board":
        try:
            board = _read_board(args.operand)
        except (ValueError, IndexError) as exc:
            print(f"error: bad board: {exc}", file=sys.stderr)
            return 2
        t = placement_to_pattern(board)
        print(json.dumps(t.to_json_dict()) if as_json else pattern_text(t))
        return 0

    try:
        pattern = parse_pattern(args.operand, cap=args.cap)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.action == "validate":
        valid = is_valid(pattern)
        if as_json:
            print(json.dumps({
                "valid": valid,
                "balls": ball_count(pattern) if valid else None,
                "minimal": is_minimal(pattern),
            }))
        else:
            print(f"valid, {ball_count(pattern)} balls" if valid else "invalid")
        return 0 if valid else 1

    try:
        if args.action == "to-board":
            board = pattern_to_placement(pattern)
            print(json.dumps(board.to_json_dict()) if as_json else board.to_text())
        elif args.action == "complement":
            result = complement(pattern)
            print(json.dumps(result.to_json_dict()) if as_json else pattern_text(result))
        elif args.action == "scale":
            if args.alpha is None:
                print("error: scale requires --alpha", file=sys.stderr)
                return 2
            result = scale_pattern(pattern, args.alpha)
            print(json.dumps(result.to_json_dict()) if as_json else pattern_text(result))
        else:
            if args.beta is None:
                print("error: shift requires --beta", file=sys.stderr)
                return 2
            result = shift_pattern(pattern, args.beta)
            print(json.dumps(result.to_json_dict()) if as_json else pattern_text(result))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# verify


def _check(name: str, parameters: dict, expected, actual) -> dict:
    return {
        "name": name,
        "parameters": parameters,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def _suite_tables(max_n: int | None) -> list[dict]:
    checks = []
    for cap, rows in sorted(EULERIAN_TABLES.items()):
        for n, expected in enumerate(rows, start=1):
            if max_n is not None and n > max_n:
                continue
            checks.append(_check(
                "table_row", {"n": n, "cap": cap},
                expected, list(count_by_drops(n, cap).counts),
            ))
    return checks


def _suite_symmetry(max_n: int | None) -> list[dict]:
    checks = []
    for cap, rows in sorted(EULERIAN_TABLES.items()):
        for n in range(1, len(rows) + 1):
            if max_n is not None and n > max_n:
                continue
            d = count_by_drops(n, cap)
            checks.append(_check(
                "palindrome", {"n": n, "cap": cap},
                list(d.counts), list(d.counts)[::-1],
            ))
    for n, cap in [(2, 1), (3, 1), (2, 2), (3, 2), (3, 3)]:
        ok = True
        seen = set()
        for p in enumerate_placements(n, cap):
            q = symmetry_map(p)
            if drops(q) != cap * (n - 1) - drops(p) or q in seen:
                ok = False
                break
            seen.add(q)
        checks.append(_check(
            "symmetry_map_complement_injective", {"n": n, "cap": cap}, True, ok,
        ))
    return checks


def _suite_recurrence(max_n: int | None) -> list[dict]:
    limit = max_n if max_n is not None else 8
    checks = []
    prev = count_by_drops(1, 1).counts
    for n in range(2, limit + 1):
        cur = count_by_drops(n, 1).counts
        ok = all(
            cur[k] == (n - k) * (prev[k - 1] if 0 <= k - 1 < len(prev) else 0)
            + (k + 1) * (prev[k] if k < len(prev) else 0)
            for k in range(n)
        )
        checks.append(_check("eulerian_recurrence", {"n": n}, True, ok))
        prev = cur
    return checks


def _suite_bijection(max_n: int | None) -> list[dict]:
    checks = []
    for n, cap in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3)]:
        if max_n is not None and n > max_n:
            continue
        round_trip = True
        balls_equal_drops = True
        involution = True
        for p in enumerate_placements(n, cap):
            t = placement_to_pattern(p)
            if pattern_to_placement(t) != p:
                round_trip = False
            if ball_count(t) != drops(p):
                balls_equal_drops = False
            ct = complement(t)
            if complement(ct) != t or ball_count(ct) + ball_count(t) != cap * (n - 1):
                involution = False
        checks.append(_check("bijection_round_trip", {"n": n, "cap": cap}, True, round_trip))
        checks.append(_check("balls_equal_drops", {"n": n, "cap": cap}, True, balls_equal_drops))
        checks.append(_check("complement_involution", {"n": n, "cap": cap}, True, involution))
    return checks


def _suite_gf(workers: int | None) -> list[dict]:
    checks = []
    for (k, cap), want in sorted(GF_CLOSED_FORMS.items()):
        got = gf_total(k, cap, workers=workers)
        checks.append(_check(
            "gf_closed_form", {"k": k, "cap": cap},
            want.to_coeff_dict(), got.to_coeff_dict(),
        ))
        expected_series = GF_SERIES[(k, cap)]
        checks.append(_check(
            "gf_series_prefix", {"k": k, "cap": cap},
            expected_series, got.series(len(expected_series) - 1),
        ))
    return checks


def _suite_boundc(max_n: int | None) -> list[dict]:
    limit = max_n if max_n is not None else 5
    checks = []
    for k in (1, 2, 3):
        for cap in range(k, 5):
            for n in range(1, limit + 1):
                base = count_by_drops(n, k).counts
                other = count_by_drops(n, cap).counts
                checks.append(_check(
                    "capacity_stabilization", {"k": k, "cap": cap, "n": n},
                    base[k] if k < len(base) else 0,
                    other[k] if k < len(other) else 0,
                ))
    for n, cap in [(2, 2), (3, 2), (4, 2), (3, 3)]:
        ok = all(
            min_diagonal_multiplicity(p) >= cap - drops(p)
            for p in enumerate_placements(n, cap)
        )
        checks.append(_check("diagonal_lower_bound", {"n": n, "cap": cap}, True, ok))
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "tables": lambda: _suite_tables(args.max_n),
        "symmetry": lambda: _suite_symmetry(args.max_n),
        "recurrence": lambda: _suite_recurrence(args.max_n),
        "bijection": lambda: _suite_bijection(args.max_n),
        "gf": lambda: _suite_gf(args.workers),
        "boundc": lambda: _suite_boundc(args.max_n),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        for check in suites[name]():
            print(json.dumps(check))
            ok = ok and check["pass"]
    return 0 if ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "table": cmd_table,
        "gf": cmd_gf,
        "generic": cmd_generic,
        "siteswap": cmd_siteswap,
        "verify": cmd_verify,
    }
    return handlers[args.command](args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
