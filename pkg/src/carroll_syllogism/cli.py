"""Command-line front end.

Exit codes: 0 valid / clean, 1 invalid / differences found, 2 bad input,
3 engine and oracle disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bilateral import format_set
from .engine import (
    CONCLUSION_ORIENTATION,
    MAJOR_ORIENTATION,
    MINOR_ORIENTATION,
    Condition,
    Mood,
    all_moods,
    decide,
    enumerate_valid,
)
from .oracle import RULES, classical_rules_check, countermodel, semantically_valid
from .parsing import ParseError, StructureError, parse_input, parse_mood
from .render import constraint_cells, render_bilateral
from .trilateral import TABLE_ORDER, load_star_fixture, star, verify_star_table

EXIT_VALID, EXIT_INVALID, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3

_ROMAN = {1: "I", 2: "II", 3: "III", 4: "IV"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def report(mood: Mood, condition: Condition, run_oracle: bool = True) -> dict:
    """The JSON-serializable record for one mood under one condition."""
    verdict = decide(mood, condition)
    return {
        "mood": str(mood),
        "condition": condition.value,
        "valid": verdict.valid,
        "conclusion_set": sorted(verdict.premises_conclusion),
        "oracle_valid": semantically_valid(mood, condition) if run_oracle else None,
        "rule_violations": list(classical_rules_check(mood).violations),
    }


def _disagrees(rec: dict) -> bool:
    return rec["oracle_valid"] is not None and rec["oracle_valid"] != rec["valid"]


def _cmd_check(args, out) -> int:
    parsed = parse_input(args.input)
    cond = Condition(args.assume)
    rec = report(parsed.mood, cond, run_oracle=not args.no_oracle)
    if args.format == "json":
        print(json.dumps(rec), file=out)
    else:
        verdict = "Valid" if rec["valid"] else "Invalid"
        print(f"{parsed.mood} ({cond}): {verdict}", file=out)
        if parsed.terms:
            names = ", ".join(f"{k}={v}" for k, v in parsed.terms.items())
            print(f"  terms: {names}", file=out)
        print(f"  premises conclusion set: {format_set(rec['conclusion_set'])}", file=out)
        if rec["oracle_valid"] is not None:
            oracle = "Valid" if rec["oracle_valid"] else "Invalid"
            print(f"  oracle: {oracle}", file=out)
            if not rec["oracle_valid"]:
                print(f"  countermodel (inhabited regions): {countermodel(parsed.mood, cond)}", file=out)
        for rule in rec["rule_violations"]:
            print(f"  rule {rule} violated: {RULES[rule]}", file=out)
    if _disagrees(rec):
        print(f"error: engine and oracle disagree on {parsed.mood} ({cond})", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_VALID if rec["valid"] else EXIT_INVALID


def _cmd_enumerate(args, out) -> int:
    cond = Condition(args.assume)
    found = enumerate_valid(cond, only_conditional=args.only_conditional)
    records = [report(mood, cond, run_oracle=not args.no_oracle) for mood, _ in found]
    if args.format == "json":
        print(json.dumps(records, indent=2), file=out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["mood", "condition", "valid", "conclusion_set", "oracle_valid"])
        for rec in records:
            writer.writerow([rec["mood"], rec["condition"], rec["valid"],
                             " ".join(map(str, rec["conclusion_set"])), rec["oracle_valid"]])
        out.write(buf.getvalue())
    else:
        columns = {f: [str(m)[:3] for m, _ in found if m.figure == f] for f in _ROMAN}
        depth = max(map(len, columns.values()), default=0)
        print(" ".join(f"{'Figure ' + _ROMAN[f]:<10}" for f in _ROMAN).rstrip(), file=out)
        for i in range(depth):
            row = [columns[f][i] if i < len(columns[f]) else "" for f in _ROMAN]
            print(" ".join(f"{cell:<10}" for cell in row).rstrip(), file=out)
        print(f"{len(found)} mood(s), {cond}", file=out)
    if any(_disagrees(rec) for rec in records):
        return EXIT_DISAGREE
    return 0


def _cmd_star(args, out) -> int:
    for v in (args.a, args.b):
        if not 0 <= v <= 15:
            raise ParseError(f"form values must lie in 0..15, got {v}")
    result = star(args.a, args.b)
    print("undefined" if result is None else format_set(result), file=out)
    return 0


def _cmd_table(args, out) -> int:
    if args.verify:
        fixture = load_star_fixture(args.fixture)
        diff = verify_star_table(fixture)
        for d in diff:
            exp = "blank" if d.expected is None else format_set(d.expected)
            got = "undefined" if d.derived is None else format_set(d.derived)
            print(f"{d.major} * {d.minor}: table {exp}, derived {got}", file=out)
        print(f"{len(diff)} difference(s)", file=out)
        return 0 if not diff else 1
    width = 4
    print("*".rjust(width) + "".join(str(b).rjust(width) for b in TABLE_ORDER), file=out)
    multi = {}
    for a in TABLE_ORDER:
        cells = []
        for b in TABLE_ORDER:
            r = star(a, b)
            if r is None:
                cells.append("")
            elif len(r) == 1:
                cells.append(str(next(iter(r))))
            else:
                key = multi.setdefault(r, f"H{len(multi) + 1}")
                cells.append(key)
        print(str(a).rjust(width) + "".join(c.rjust(width) for c in cells), file=out)
    for r, key in multi.items():
        print(f"{key} = {format_set(r)}", file=out)
    return 0


def _cmd_oracle_diff(args, out) -> int:
    count = 0
    for cond in Condition:
        for mood in all_moods():
            engine = decide(mood, cond).valid
            oracle = semantically_valid(mood, cond)
            if engine != oracle:
                count += 1
                print(f"{mood} ({cond}): engine {engine}, oracle {oracle}", file=out)
    print(f"{count} disagreement(s) over {4 * 256} cases", file=out)
    return 0 if count == 0 else 1


def _cmd_render(args, out) -> int:
    mood = parse_mood(args.mood)
    major, minor, conclusion = mood.propositions()
    for title, prop, orient in (
        ("major", major, MAJOR_ORIENTATION),
        ("minor", minor, MINOR_ORIENTATION),
        ("conclusion", conclusion, CONCLUSION_ORIENTATION),
    ):
        print(f"{title}: {prop}", file=out)
        print(render_bilateral(constraint_cells(prop, orient), orient.row, orient.col), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="carroll-syllogism", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def assume(p):
        p.add_argument("--assume", choices=[c.value for c in Condition], default="none",
                       help="existential import: none, s, m or p")

    p = sub.add_parser("check", help="decide one syllogism")
    p.add_argument("input", nargs="+",
                   help="a mood such as AAA-1, or three statements (major, minor, conclusion)")
    assume(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--no-oracle", action="store_true", help="skip the semantic cross-check")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="list valid moods")
    assume(p)
    p.add_argument("--only-conditional", action="store_true",
                   help="only moods that need the existence assumption")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("star", help="possible conclusions of two forms")
    p.add_argument("a", type=int, help="major form, rows M / columns P")
    p.add_argument("b", type=int, help="minor form, rows M / columns S")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("table", help="print or verify the operation table")
    p.add_argument("--verify", action="store_true", help="diff against the fixture")
    p.add_argument("--fixture", default=None, help="alternative fixture file")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("oracle-diff", help="engine vs oracle on all 1024 cases")
    p.set_defaults(func=_cmd_oracle_diff)

    p = sub.add_parser("render", help="draw the diagrams of a mood")
    p.add_argument("mood")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (ParseError, StructureError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
