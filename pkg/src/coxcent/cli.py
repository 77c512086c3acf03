"""Command-line frontend: analyze, verify, theorems.

Exit codes: 0 verified/ok, 1 table mismatch, 2 internal check violation,
3 usage or capability error.  All outputs are deterministic: two runs on
the same inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coxtype import CoxeterType
from .rootsys import CapabilityError
from .structure import RecognitionError, ViolationError, run_property_suite
from .tables import (
    SCHEMA_VERSION,
    analyze,
    class_csv,
    class_json,
    compare_rows,
    computed_rows,
    diff_report,
    expected_rows,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 3

FAMILY_TYPES = ("A", "B", "D")
FIXED_TYPES = {
    "E6": ("E", 6),
    "E7": ("E", 7),
    "E8": ("E", 8),
    "F4": ("F", 4),
    "H3": ("H", 3),
    "H4": ("H", 4),
}

ALL_SMALL = (
    [("A", r) for r in range(1, 7)]
    + [("B", r) for r in range(2, 8)]
    + [("D", r) for r in range(4, 8)]
    + [("I", m) for m in (5, 7, 8, 12)]
    + [("H", 3), ("H", 4), ("F", 4), ("E", 6), ("E", 7)]
)


def _parse_type(args) -> CoxeterType:
    t = args.type
    try:
        if t in FIXED_TYPES:
            return CoxeterType.irreducible(*FIXED_TYPES[t])
        if t in FAMILY_TYPES:
            if args.rank is None:
                raise CapabilityError(f"family {t} needs --rank")
            ctype = CoxeterType([(t, args.rank)])
        elif t == "I2":
            if args.m is None:
                raise CapabilityError("type I2 needs --m")
            ctype = CoxeterType([("I", args.m)])
        else:
            raise CapabilityError(f"unsupported type {t!r}")
    except ValueError as exc:
        raise CapabilityError(str(exc)) from exc
    if not ctype.is_irreducible():
        raise CapabilityError(f"{t} with these parameters is not irreducible")
    return ctype


def _write(out_dir: str | None, name: str, text: str, fmt: str, to_stdout: bool):
    if out_dir is None:
        if to_stdout:
            sys.stdout.write(text)
        return
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    (path / name).write_text(text, encoding="utf-8")


def cmd_analyze(args) -> int:
    ctype = _parse_type(args)
    if ctype == CoxeterType.irreducible("E", 8) and not args.large:
        print(
            "E8 is gated behind --large (expect minutes, not seconds)",
            file=sys.stderr,
        )
        return EXIT_USAGE
    analysis = analyze(ctype, max_rank=args.max_rank)
    name = str(ctype).replace("(", "_").replace(")", "")
    csv_text = class_csv(analysis)
    json_text = class_json(analysis)
    if args.out:
        _write(args.out, f"{name}.csv", csv_text, "csv", False)
        _write(args.out, f"{name}.json", json_text, "json", False)
    else:
        sys.stdout.write(json_text if args.format == "json" else csv_text)
    return EXIT_OK


def _verify_one(ctype: CoxeterType, args) -> tuple[int, dict]:
    expect = expected_rows(ctype, args.fixtures)
    analysis = analyze(ctype, max_rank=args.max_rank)
    got = computed_rows(analysis.group, analysis.profiles)
    diffs = compare_rows(expect, got)
    report = diff_report(ctype, diffs)
    report["rows_compared"] = len(expect)
    return (EXIT_OK if not diffs else EXIT_MISMATCH), report


def cmd_verify(args) -> int:
    if args.all:
        targets = [CoxeterType([c]) for c in ALL_SMALL]
        if args.large:
            targets.append(CoxeterType.irreducible("E", 8))
    else:
        ctype = _parse_type(args)
        if ctype == CoxeterType.irreducible("E", 8) and not args.large:
            print(
                "E8 is gated behind --large (expect minutes, not seconds)",
                file=sys.stderr,
            )
            return EXIT_USAGE
        targets = [ctype]
    reports = []
    status = EXIT_OK
    for ctype in targets:
        code, report = _verify_one(ctype, args)
        reports.append(report)
        rows = report["rows_compared"]
        if code == EXIT_OK:
            print(f"{ctype}: ok ({rows} rows compared)")
        else:
            status = max(status, code)
            print(f"{ctype}: MISMATCH")
            for d in report["diffs"]:
                print(
                    f"  degree {d['row']['degree']} {d['row']['labels']}: "
                    f"{d['column']}: expected {d['expected']}, computed {d['computed']}"
                )
    if args.out:
        doc = {"schema_version": SCHEMA_VERSION, "reports": reports}
        _write(args.out, "verify.json", json.dumps(doc, indent=2, sort_keys=True) + "\n", "json", False)
    return status


def cmd_theorems(args) -> int:
    ctype = _parse_type(args)
    if ctype == CoxeterType.irreducible("E", 8) and not args.large:
        print("E8 is gated behind --large", file=sys.stderr)
        return EXIT_USAGE
    analysis = analyze(ctype, max_rank=args.max_rank)
    results = run_property_suite(analysis.group, analysis.classes)
    if args.check:
        wanted = args.check
        if wanted == "gamma":
            results = [r for r in results if r.name in ("1.2",)]
        else:
            results = [r for r in results if r.name == wanted]
    gamma_rows = [
        {
            "degree": p.cls.degree,
            "label": p.cls.label,
            "gamma_structure": str(p.gamma_structure),
            "gamma_order": p.gamma_order,
        }
        for p in analysis.profiles
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "type": str(ctype),
        "checks": [
            {
                "name": r.name,
                "subject": r.subject,
                "status": r.status,
                "detail": r.detail,
            }
            for r in results
        ],
        "gamma": gamma_rows,
        "violations": sum(1 for r in results if r.status == "fail"),
    }
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        _write(args.out, f"theorems_{ctype}.json", text, "json", False)
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc["violations"] == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxcent",
        description=(
            "Exact involution-centralizer tables for finite Coxeter groups"
        ),
    )
    from . import __version__

    parser.add_argument("--version", action="version", version=f"coxcent {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_type=True):
        if with_type:
            p.add_argument(
                "--type",
                required=False,
                choices=list(FAMILY_TYPES) + list(FIXED_TYPES) + ["I2"],
                help="irreducible type",
            )
            p.add_argument("--rank", type=int, help="rank for families A/B/D")
            p.add_argument("--m", type=int, help="m for I2(m)")
        p.add_argument("--max-rank", type=int, default=12)
        p.add_argument("--out", help="directory for output artifacts")
        large = p.add_mutually_exclusive_group()
        large.add_argument("--large", action="store_true", help="enable E8")
        large.add_argument(
            "--skip-large",
            dest="large",
            action="store_false",
            help="skip E8 (default)",
        )
        p.set_defaults(large=False)

    p_an = sub.add_parser("analyze", help="compute classes and profiles")
    common(p_an)
    p_an.add_argument("--format", choices=["csv", "json"], default="csv")
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="compare against the reference tables")
    common(p_ver)
    p_ver.add_argument("--all", action="store_true", help="verify every supported type")
    p_ver.add_argument("--fixtures", help="override the reference table file")
    p_ver.set_defaults(func=cmd_verify)

    p_th = sub.add_parser("theorems", help="run the structural check suite")
    common(p_th)
    p_th.add_argument("--check", help="restrict to one named check (e.g. 2.3)")
    p_th.set_defaults(func=cmd_theorems)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "type", None) is None and not getattr(args, "all", False):
        parser.error_exit = True
        print("a --type is required (or --all for verify)", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ViolationError, RecognitionError) as exc:
        print(f"internal check violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
