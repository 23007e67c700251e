"""Command-line interface: check, search, search-rev, gray, tables.

Every subcommand is a thin shell over the library; the CLI only parses
flags, routes errors to exit codes, and writes text or figure files.
Exit codes: 0 on success, 2 on bad input or a rejected enumeration
budget, 1 when a computation reports a failure (a table mismatch or a
reversal violation).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .groupring import GroupRingElement
from .plotting import save_parameter_profile
from .search import (
    BudgetExceededError,
    ReversalViolationError,
    SearchSpec,
    default_workers,
    element_record,
    emit_records,
    parse_group_id,
    parse_ring_id,
    parse_v_bits,
    run_search,
)
from .tables import reproduce_table, table_ids


def _parse_element(group, ring, text: str) -> GroupRingElement:
    """Accept a coefficient bitstring or named terms like b+ab+a2b."""
    stripped = text.strip()
    if set(stripped) <= {"0", "1"} and len(stripped) == group.order * ring.n_monomials:
        return parse_v_bits(group, ring, stripped)
    return GroupRingElement.from_terms(group, stripped, ring)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _bits_to_int(text: str) -> int:
    return sum(1 << pos for pos, ch in enumerate(text) if ch == "1")


def _int_to_bits(value: int, length: int) -> str:
    return "".join("1" if (value >> pos) & 1 else "0" for pos in range(length))


def cmd_check(args: argparse.Namespace) -> int:
    group = parse_group_id(args.group)
    ring = parse_ring_id(args.ring)
    v = _parse_element(group, ring, args.v)
    rec = element_record(v)
    if args.json:
        print(json.dumps(rec.to_json_dict(), indent=2))
        return 0
    n = group.order
    print(f"group {group.name}, ring {args.ring}: sigma(v) is {n} x {n}")
    print(f"v = {rec.v_bits} ({v.to_terms()})")
    print(f"symmetric (v equals its involution): {_yn(v.is_symmetric())}")
    d = "-" if rec.d is None else rec.d
    print(f"binary code: n={rec.n} k={rec.k} d={d}")
    print(f"trivial hull (complementary dual): {_yn(rec.lcd)}")
    print(f"closed under reversal: {_yn(rec.reversible)}")
    print(f"invariant under group translations: {_yn(rec.g_invariant)}")
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    spec = SearchSpec(
        group=parse_group_id(args.group),
        ring=parse_ring_id(args.ring),
        symmetric=not args.unrestricted,
        include_trivial=args.include_trivial,
        require_reversible=args.require_reversible,
        n_workers=default_workers(),
    )
    try:
        result = run_search(spec)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ReversalViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.all_codes:
        records = [
            rec
            for rec in result.codes
            if (args.min_k is None or rec.k >= args.min_k)
            and (args.max_k is None or rec.k <= args.max_k)
        ]
    else:
        records = result.parameter_rows(min_k=args.min_k, max_k=args.max_k)
    text = emit_records(records, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {len(records)} rows to {args.out}")
    else:
        print(text, end="")
    if args.plot:
        save_parameter_profile(records, args.plot)
        print(f"wrote figure to {args.plot}")
    return 0


def cmd_gray(args: argparse.Namespace) -> int:
    ring = parse_ring_id(args.ring)
    width = ring.n_monomials
    bits = args.v.strip()
    if set(bits) - {"0", "1"} or not bits:
        raise ValueError(f"expected a bitstring, got {args.v!r}")
    if len(bits) % width:
        raise ValueError(
            f"bit length must be a multiple of {width} for ring {args.ring}"
        )
    length = len(bits) // width
    if args.inverse:
        coeffs = ring.ungray_vector(_bits_to_int(bits), length)
        print("".join(format(c, f"0{width}b")[::-1] for c in coeffs))
    else:
        coeffs = tuple(
            int(bits[pos * width : (pos + 1) * width][::-1], 2) for pos in range(length)
        )
        print(_int_to_bits(ring.gray_vector(coeffs), length * width))
    return 0


def _format_pairs(pairs) -> str:
    ordered = sorted(pairs, key=lambda t: (t[1], -t[2]))
    return " ".join(f"[{n},{k},{d}]" for n, k, d in ordered)


def cmd_tables(args: argparse.Namespace) -> int:
    if args.ids == ["all"]:
        ids = table_ids()
    else:
        try:
            ids = [int(raw) for raw in args.ids]
        except ValueError:
            raise ValueError(f"table ids must be integers or 'all', got {args.ids}") from None
    failed = []
    for table_id in ids:
        outcome = reproduce_table(table_id, n_workers=default_workers())
        tag = "exact" if outcome.exact else "MISMATCH"
        print(
            f"table {table_id} ({outcome.group_id}): {tag}  {_format_pairs(outcome.found)}",
            flush=True,
        )
        if not outcome.exact:
            failed.append(table_id)
            if outcome.missing:
                print(f"  missing: {_format_pairs(outcome.missing)}")
            if outcome.extra:
                print(f"  extra: {_format_pairs(outcome.extra)}")
        if args.plot_dir:
            plot_dir = Path(args.plot_dir)
            plot_dir.mkdir(parents=True, exist_ok=True)
            path = plot_dir / f"table_{table_id:02d}.png"
            save_parameter_profile(
                outcome.result.parameter_rows(exclude_repetition=True),
                path,
                title=f"table {table_id} ({outcome.group_id})",
            )
            print(f"  wrote figure to {path}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouplcd",
        description="Complementary-dual and reversible codes from group matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="evaluate one element and its code")
    check.add_argument("--group", required=True, help="c<n>, d<order>[:aibj|bjai|rev]")
    check.add_argument("--ring", default="f2", help="f2 (default), r1, r2, or r3")
    check.add_argument(
        "--v",
        required=True,
        help="coefficient bitstring over the listing, or named terms like b+ab+a2b",
    )
    check.add_argument("--json", action="store_true", help="emit the record as JSON")
    check.set_defaults(func=cmd_check)

    searches = (
        ("search", "enumerate elements and tabulate trivial-hull codes", False),
        ("search-rev", "search and require every survivor to reverse onto itself", True),
    )
    for name, help_text, require_reversible in searches:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--group", required=True, help="c<n>, d<order>[:aibj|bjai|rev]")
        p.add_argument("--ring", default="f2", help="f2 (default), r1, r2, or r3")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument(
            "--symmetric",
            dest="unrestricted",
            action="store_false",
            help="walk symmetric elements only (default)",
        )
        mode.add_argument(
            "--unrestricted",
            dest="unrestricted",
            action="store_true",
            help="walk every element of the group ring",
        )
        p.set_defaults(unrestricted=False)
        p.add_argument("--include-trivial", action="store_true")
        p.add_argument("--min-k", type=int, default=None)
        p.add_argument("--max-k", type=int, default=None)
        p.add_argument(
            "--all-codes",
            action="store_true",
            help="one row per distinct code instead of one per (k, d)",
        )
        p.add_argument("--format", choices=("csv", "json", "md"), default="csv")
        p.add_argument("--out", default=None, help="write the table to this file")
        p.add_argument(
            "--plot", default=None, help="render a distance-by-dimension figure here"
        )
        p.set_defaults(func=cmd_search, require_reversible=require_reversible)

    gray = sub.add_parser("gray", help="apply the distance-preserving binary map")
    gray.add_argument("--ring", required=True, help="r1, r2, or r3 (f2 is the identity)")
    gray.add_argument(
        "--v", required=True, help="bit blocks, 2^k per coordinate, low monomial first"
    )
    gray.add_argument("--inverse", action="store_true", help="invert the map instead")
    gray.set_defaults(func=cmd_gray)

    tables = sub.add_parser("tables", help="reproduce bundled reference tables")
    tables.add_argument("ids", nargs="+", help="table numbers 1..16, or 'all'")
    tables.add_argument(
        "--plot-dir", default=None, help="write one profile figure per table here"
    )
    tables.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
