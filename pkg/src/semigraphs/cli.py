"""``semigraphs`` command line.

Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characterizations as ch
from .constructors import parse_construct
from .core import Semigroup, idempotents, load_semigroup
from .enumeration import CensusConfig, enumerate_semigroups, verify_corpus
from .errors import ConstructSyntaxError, InvalidParameters, OrderTooLarge, SemigroupError
from .graphs import GraphKind, build_graph, export_graph, is_complete


class UsageError(Exception):
    pass


def _load(text: str) -> tuple[str, Semigroup]:
    try:
        spec = parse_construct(text)
    except (ConstructSyntaxError, InvalidParameters) as exc:
        raise UsageError(str(exc)) from None
    return str(spec), spec.build()


def cmd_validate(args, out) -> int:
    try:
        S = load_semigroup(args.path)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    except SemigroupError as exc:
        if args.json:
            print(json.dumps({"valid": False, "error": str(exc)}), file=out)
        print(f"{args.path}: invalid: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"valid": True, "order": S.order}), file=out)
    else:
        print(f"{args.path}: valid semigroup of order {S.order}", file=out)
    return 0


def _analysis(S: Semigroup) -> dict:
    complete = {k.value: is_complete(build_graph(S, k)) for k in GraphKind}
    return {
        "order": S.order,
        "elements": [
            {
                "id": p.generator,
                "label": S.label(p.generator),
                "index": p.index,
                "period": p.period,
                "orbit_size": len(p.orbit),
                "idempotent": p.idempotent,
            }
            for p in S.profiles
        ],
        "idempotents": idempotents(S).ids(),
        "commutative": S.is_commutative,
        "complete": complete,
    }


def cmd_analyze(args, out) -> int:
    name, S = _load(args.construct)
    info = _analysis(S)
    if args.json:
        print(json.dumps({"construct": name, **info}), file=out)
        return 0
    print(f"{name}: order {S.order}", file=out)
    rows = [("id", "label", "index", "period", "orbit", "idempotent")]
    rows += [
        (str(e["id"]), e["label"], str(e["index"]), str(e["period"]), str(e["orbit_size"]), S.label(e["idempotent"]))
        for e in info["elements"]
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip(), file=out)
    print("idempotents: " + ", ".join(S.label(e) for e in info["idempotents"]), file=out)
    print(f"commutative: {'yes' if info['commutative'] else 'no'}", file=out)
    titles = {"power": "power graph", "cyclic": "cyclic graph", "enhanced": "enhanced power graph", "commuting": "commuting graph"}
    for kind, flag in info["complete"].items():
        print(f"{titles[kind]} complete: {'yes' if flag else 'no'}", file=out)
    return 0


def cmd_graph(args, out) -> int:
    _, S = _load(args.construct)
    out.write(export_graph(build_graph(S, args.kind), args.format).rstrip("\n") + "\n")
    return 0


def _print_reports(reports, n_semigroups, args, out) -> int:
    mismatches = [r for r in reports if not r.agrees]
    if args.json:
        for r in reports if args.construct else mismatches:
            print(json.dumps(r.to_json()), file=out)
        print(json.dumps({"theorems": len(ch.TheoremId), "semigroups": n_semigroups, "mismatches": len(mismatches)}), file=out)
        return 1 if mismatches else 0
    if args.construct:
        for r in reports:
            status = "ok" if r.agrees else "MISMATCH"
            line = f"{r.theorem.value:<14} predicate={str(r.predicate_verdict):<5} graph={str(r.graph_verdict):<5} {status}"
            if r.witness:
                line += f"  {r.witness}"
            print(line, file=out)
    else:
        for t in ch.TheoremId:
            rows = [r for r in reports if r.theorem is t]
            bad = sum(not r.agrees for r in rows)
            holds = sum(r.graph_verdict for r in rows)
            print(f"{t.value:<14} checked={len(rows)} holds={holds} mismatches={bad}", file=out)
        for r in mismatches:
            print(f"MISMATCH {r.construct} {r.theorem.value}: {r.witness}", file=out)
    print(f"{len(ch.TheoremId)} theorems × {n_semigroups} semigroups, {len(mismatches)} mismatches", file=out)
    return 1 if mismatches else 0


def cmd_verify(args, out) -> int:
    if bool(args.construct) == bool(args.census or args.families):
        raise UsageError("give either --construct or --census/--families")
    if args.construct:
        name, S = _load(args.construct)
        reports = ch.verify_all(S, name)
        return _print_reports(reports, 1, args, out)
    config = _config(args, census=args.census, families=args.families)
    reports = verify_corpus(config)
    return _print_reports(reports, len(reports) // len(ch.TheoremId), args, out)


def _config(args, census=True, families=True) -> CensusConfig:
    try:
        return CensusConfig(args.max_order, True, args.workers, census, families)
    except (ValueError, OrderTooLarge) as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args, out) -> int:
    try:
        for S in enumerate_semigroups(args.order, args.up_to_iso, args.workers):
            print(json.dumps(S.to_json()), file=out)
    except OrderTooLarge as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_report(args, out) -> int:
    config = _config(args, census=not args.no_census, families=not args.no_families)
    mismatches = 0
    for r in verify_corpus(config):
        mismatches += not r.agrees
        print(json.dumps(r.to_json()), file=out)
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="semigraphs",
        description="Power, cyclic, enhanced power and commuting graphs of finite semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a Cayley-table JSON file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", parents=[common], help="per-element structure and graph completeness")
    p.add_argument("construct", help='e.g. "M(3,2)", "B(2)", "Zmult(4)", "C(6)xC(2)", or a table file')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", parents=[common], help="export one of the four graphs")
    p.add_argument("construct")
    p.add_argument("--kind", required=True, choices=[k.value for k in GraphKind])
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", parents=[common], help="compare predicates with graph verdicts")
    p.add_argument("--construct")
    p.add_argument("--census", action="store_true", help="all semigroups up to --max-order")
    p.add_argument("--families", action="store_true", help="the built-in family corpus")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="JSON-lines census of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", parents=[common], help="JSON-lines verification rows for the corpus")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--no-census", action="store_true")
    p.add_argument("--no-families", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_report)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"semigraphs {args.command}: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:
        print(f"semigraphs {args.command}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
