"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classifier import THEOREM_TABLE, classify, verify_all
from .dynkin import ADEType, InvalidRankError, build_ade
from .flop_model import (
    attachment_points,
    d_multiplicity,
    end_component_multiplicities,
    enumerate_marked,
    mark,
    partial_resolution,
)
from .formats import (
    config_to_json,
    cycle_to_json,
    describe,
    facts_to_json,
    marked_to_json,
    report_to_json,
    to_dot,
)
from .fundamental_cycle import fundamental_cycle, laufer_fundamental_cycle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GRAPH_COMMANDS = {"diagram", "fundcycle", "mark"}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _cycle_str(z) -> str:
    return " ".join(f"{v}:{c}" for v, c in z.as_dict().items())


def _parse_type(text: str) -> ADEType:
    try:
        return ADEType.parse(text)
    except InvalidRankError as exc:
        raise UsageError(str(exc)) from None


def cmd_diagram(args) -> tuple[str, int]:
    t = _parse_type(args.type)
    config = build_ade(t)
    f = fundamental_cycle(config) if args.fundcycle else None
    if args.format == "dot":
        return to_dot(config, f, name=str(t)), EXIT_OK
    if args.format == "json":
        out = config_to_json(config, t)
        if f is not None:
            out["fundamental_cycle"] = cycle_to_json(f)
        if args.describe:
            out["legend"] = {str(v): d for v, d in describe(config).items()}
        return _dump(out), EXIT_OK
    lines = [f"{t}: {len(config)} vertices, {len(config.edges)} edges"]
    lines.append("edges: " + (" ".join(f"{a}-{b}" for a, b in config.edges) or "(none)"))
    if f is not None:
        lines.append(f"fundamental cycle: {_cycle_str(f)}  (max {f.max()})")
    if args.describe:
        lines += [f"  {v:>3}  {d}" for v, d in describe(config).items()]
    return "\n".join(lines), EXIT_OK


def cmd_fundcycle(args) -> tuple[str, int]:
    t = _parse_type(args.type)
    trace = laufer_fundamental_cycle(build_ade(t))
    if args.format == "dot":
        return to_dot(trace.result.config, trace.result, name=str(t)), EXIT_OK
    if args.format == "json":
        out = cycle_to_json(trace.result)
        if args.trace:
            out["steps"] = [list(s) for s in trace.steps]
        return _dump(out), EXIT_OK
    if args.trace:
        return trace.table(), EXIT_OK
    return f"{t}: {_cycle_str(trace.result)}", EXIT_OK


def cmd_mark(args) -> tuple[str, int]:
    t = _parse_type(args.type)
    try:
        marked = mark(t, args.vertex)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dot":
        return to_dot(marked.config, marked.fund_cycle, name=f"{t} k0={marked.k0}"), EXIT_OK
    if args.format == "json":
        return _dump(marked_to_json(marked)), EXIT_OK
    pr = partial_resolution(marked)
    sec = attachment_points(marked.config)
    lines = [
        f"{t} marked at k0={marked.k0}: length {marked.length}",
        f"fundamental cycle: {_cycle_str(marked.fund_cycle)}",
        "attach points: " + " ".join(f"{v}(x{c})" for v, c in sec.attach_points)
        + f"  branches: {sec.branch_count}",
        f"components: {len(pr.components)}",
    ]
    if pr.components:
        lines.append(f"  {'#':>2}  {'type':<4}  {'vertices':<18}  {'F_i':<24}  {'k0 nbrs':<8}  "
                     f"{'attach':<7}  {'d_i':>3}  ends in F")
    for i, c in enumerate(pr.components):
        ends = ""
        if c.type.family == "A":
            ends = " ".join(f"{v}:{m}" for v, m in end_component_multiplicities(marked, i))
        lines.append(
            f"  {i:>2}  {str(c.type):<4}  {','.join(map(str, c.config.vertices)):<18}  "
            f"{_cycle_str(c.fund_cycle):<24}  {','.join(map(str, c.k0_neighbors)):<8}  "
            f"{','.join(str(v) for v, _ in c.attach_points) or '-':<7}  "
            f"{d_multiplicity(marked, i):>3}  {ends}"
        )
    return "\n".join(lines), EXIT_OK


def cmd_enumerate(args) -> tuple[str, int]:
    if args.length < 1:
        raise UsageError("length must be positive")
    found = enumerate_marked(args.length, args.max_rank)
    if args.format == "json":
        return _dump([
            {"type": str(m.type), "k0": m.k0, "components": [str(t) for t in partial_resolution(m).types]}
            for m in found
        ]), EXIT_OK
    lines = [f"length {args.length}, rank <= {args.max_rank}: {len(found)} marked diagrams"]
    for m in found:
        split = " + ".join(str(t) for t in partial_resolution(m).types) or "(none)"
        lines.append(f"  {str(m.type):<4} k0={m.k0:<3} components: {split}")
    return "\n".join(lines), EXIT_OK


def cmd_classify(args) -> tuple[str, int]:
    if args.length not in THEOREM_TABLE:
        raise UsageError(f"length must be between 1 and 6, got {args.length}")
    report = classify(args.length, args.max_rank)
    code = EXIT_OK if report.passed else EXIT_FAIL
    if args.format == "json":
        return _dump(report_to_json(report)), code
    lines = [
        f"length {report.length}: {len(report.candidates)} candidates (rank <= {report.max_rank})",
        f"survivor: {', '.join(str(m) for m in report.survivors) or '(none)'}"
        f"   expected {report.expected}   uniqueness: {report.uniqueness_check}",
    ]
    for e in report.eliminations:
        lines.append(f"  eliminated {e.candidate}:")
        for u in e.rules:
            flag = "[axiom]" if u.rule.kind == "analytic-axiom" else "[comb.]"
            where = f" @component {u.component}" if u.component is not None else ""
            detail = f" ({u.detail})" if u.detail else ""
            lines.append(f"    {flag} {u.rule.name}{where}{detail}")
            if u.rule.kind == "analytic-axiom":
                lines.append(f'            "{u.rule.quote}"')
        for p in e.premises:
            lines.append(f"    premise {'ok  ' if p.passed else 'FAIL'} {p.name}: {p.computed}")
    lines.append(f"{'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines), code


def cmd_verify(args) -> tuple[str, int]:
    if args.max_rank < 8:
        raise UsageError("--max-rank must be at least 8")
    facts = verify_all(args.max_rank)
    failed = [f for f in facts if not f.passed]
    code = EXIT_FAIL if failed else EXIT_OK
    if args.format == "json":
        return _dump({"passed": not failed, "facts": facts_to_json(facts)}), code
    lines = [f"{'PASS' if f.passed else 'FAIL'}  {f.name}" for f in facts]
    if failed:
        lines.append(f"{len(failed)} of {len(facts)} facts failed:")
        lines += [f"  {f.name}: expected {f.expected}, computed {f.computed}" for f in failed]
    else:
        lines.append(f"all {len(facts)} facts pass")
    return "\n".join(lines), code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "dot"), default=argparse.SUPPRESS)
    common.add_argument("--max-rank", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="flopcycles", parents=[common],
                                     description="ADE diagrams, fundamental cycles and flop lengths.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagram", parents=[common], help="show an ADE configuration")
    p.add_argument("type")
    p.add_argument("--fundcycle", action="store_true", help="annotate with the fundamental cycle")
    p.add_argument("--describe", action="store_true", help="legend of vertex positions")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("fundcycle", parents=[common], help="fundamental cycle by Laufer's algorithm")
    p.add_argument("type")
    p.add_argument("--trace", action="store_true", help="print every step")
    p.set_defaults(func=cmd_fundcycle)

    p = sub.add_parser("mark", parents=[common], help="mark a vertex and show the partial resolution")
    p.add_argument("type")
    p.add_argument("vertex", type=int)
    p.set_defaults(func=cmd_mark)

    p = sub.add_parser("enumerate", parents=[common], help="marked diagrams of a given length")
    p.add_argument("length", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="run the case analysis for one length")
    p.add_argument("length", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="check every fact and oracle")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.format = getattr(args, "format", "table")
    args.max_rank = getattr(args, "max_rank", 12)
    try:
        if args.format == "dot" and args.command not in GRAPH_COMMANDS:
            raise UsageError(f"--format dot is not available for {args.command}")
        out, code = args.func(args)
    except UsageError as exc:
        print(f"flopcycles {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
