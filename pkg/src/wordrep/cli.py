"""Command-line surface: classification, censuses, family generation,
orientation search and bounded word search.

Graphs travel as graph6 text, one per line, on files or stdin.
Machine-readable output is line-oriented JSON behind --json.  Exit
codes: 0 success, 1 usage or parse errors, 2 census expectation
mismatch, 3 internal invariant violation (two routes that must agree
disagreed - worth reporting, not suppressing).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import families
from .classify import REASON_ORACLE, Verdict, classify_split
from .graphs import (
    Graph,
    Graph6Error,
    enumerate_graphs,
    is_connected,
    parse_graph6,
    write_graph6,
)
from .orient import (
    OracleDisagreement,
    OrientedGraph,
    all_orientations,
    count_semi_transitive_extensions,
    find_semi_transitive_orientation,
    is_semi_transitive,
    is_word_representable,
    orient_by_bits,
    orientation_bits,
    to_dot,
)
from .split import KIND_INVALID, check_relative_order, classify_all, split_partition
from .words import find_representant, format_word, parse_word, represents

LARGE_CENSUS_VAR = "WORDREP_ALLOW_LARGE_CENSUS"


@dataclass
class RunReport:
    """What a subcommand did: echoed command, per-graph results, timing,
    and summary counts keyed by verdict."""

    command: str
    results: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def bump(self, key: str) -> None:
        self.counts[key] = self.counts.get(key, 0) + 1


def _read_graph_lines(paths: list[str]) -> list[tuple[int, str]]:
    """Numbered non-blank input lines from files or stdin."""
    lines: list[tuple[int, str]] = []
    if not paths or paths == ["-"]:
        raw = sys.stdin.read().splitlines()
        lines.extend((i + 1, s) for i, s in enumerate(raw) if s.strip())
    else:
        lineno = 0
        for path in paths:
            with open(path) as fh:
                for s in fh.read().splitlines():
                    lineno += 1
                    if s.strip():
                        lines.append((lineno, s))
    return lines


def _parse_inputs(paths: list[str]) -> tuple[list[tuple[int, Graph]], int]:
    """Parse graph6 lines; returns (parsed, error_count) and reports
    failures with line numbers on stderr."""
    parsed: list[tuple[int, Graph]] = []
    errors = 0
    for lineno, line in _read_graph_lines(paths):
        try:
            parsed.append((lineno, parse_graph6(line.strip())))
        except Graph6Error as exc:
            errors += 1
            print(f"line {lineno}: {exc}", file=sys.stderr)
    return parsed, errors


def _verdict_for(g: Graph, verify: bool, witness: bool) -> Verdict:
    if split_partition(g) is not None:
        return classify_split(g, verify=verify, want_orientation=witness)
    representable = is_word_representable(g)
    og = None
    if witness and representable:
        og = find_semi_transitive_orientation(g)
    return Verdict(representable, REASON_ORACLE, witness_orientation=og)


# ---------------------------------------------------------------------------
# classify


def cmd_classify(args) -> int:
    report = RunReport("classify")
    start = time.perf_counter()
    parsed, errors = _parse_inputs(args.inputs)
    for lineno, g in parsed:
        verdict = _verdict_for(g, args.verify, args.witness)
        report.bump(("" if verdict.representable else "non-") + "representable")
        g6 = write_graph6(g)
        report.results.append((g6, verdict))
        if args.json:
            payload = {"graph6": g6, **verdict.to_json()}
            print(json.dumps(payload))
        else:
            status = "representable" if verdict.representable else "non-representable"
            extra = ""
            if verdict.witness_pattern is not None:
                name, emb = verdict.witness_pattern
                extra = f"\twitness={name}:{','.join(map(str, emb.mapping))}"
            elif verdict.witness_orientation is not None:
                extra = f"\torientation={orientation_bits(verdict.witness_orientation)}"
            print(f"{g6}\t{status}\t{verdict.reason}{extra}")
    report.elapsed = time.perf_counter() - start
    return 1 if errors else 0


# ---------------------------------------------------------------------------
# census


def cmd_census(args) -> int:
    n = args.n
    allow_large = bool(os.environ.get(LARGE_CENSUS_VAR))
    if n > 8 and not allow_large:
        print(
            f"census beyond n=8 is gated; set {LARGE_CENSUS_VAR}=1 to override",
            file=sys.stderr,
        )
        return 1
    report = RunReport(f"census {n} --filter {args.filter}")
    start = time.perf_counter()
    total = 0
    non_rep: list[tuple[str, bool, bool]] = []
    for g in enumerate_graphs(n, allow_large=allow_large):
        connected = is_connected(g)
        if args.filter == "connected" and not connected:
            continue
        sp = split_partition(g)
        if args.filter == "split" and sp is None:
            continue
        total += 1
        if sp is not None:
            verdict = classify_split(g)
        else:
            verdict = Verdict(is_word_representable(g), REASON_ORACLE)
        key = ("" if verdict.representable else "non-") + f"representable/{verdict.reason}"
        report.bump(key)
        if not verdict.representable:
            non_rep.append((write_graph6(g), sp is not None, connected))
    report.results = non_rep
    report.elapsed = time.perf_counter() - start
    for g6, is_split_graph, connected in non_rep:
        if args.json:
            print(json.dumps({"graph6": g6, "split": is_split_graph, "connected": connected}))
        else:
            print(f"{g6}\tnon-representable" + ("\tsplit" if is_split_graph else ""))
    summary = {
        "n": n,
        "filter": args.filter,
        "classes": total,
        "non_representable": len(non_rep),
        "connected_non_representable": sum(1 for _, _, c in non_rep if c),
        "counts": dict(sorted(report.counts.items())),
        "seconds": round(report.elapsed, 3),
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(
            f"# n={n} filter={args.filter} classes={total} "
            f"non-representable={len(non_rep)} "
            f"(connected: {summary['connected_non_representable']}) "
            f"seconds={summary['seconds']}"
        )
        for key, cnt in summary["counts"].items():
            print(f"#   {key}: {cnt}")
    if args.expected is not None and args.expected != len(non_rep):
        print(
            f"expected {args.expected} non-representable graphs, found {len(non_rep)}",
            file=sys.stderr,
        )
        return 2
    return 0


# ---------------------------------------------------------------------------
# generate


def cmd_generate(args) -> int:
    try:
        g = families.named(args.tag, *args.params)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    print(write_graph6(g))
    if args.word:
        try:
            w = families.k_triangle_odd_word(*args.params) if args.tag == "K_TRIANGLE" else None
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        if w is None:
            print(f"no explicit word defined for {args.tag}", file=sys.stderr)
            return 1
        assert represents(w, g)
        print(format_word(w))
    if args.orientation:
        try:
            og = families.canonical_orientation(args.tag, *args.params)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        print(orientation_bits(og))
        print(to_dot(og))
    return 0


# ---------------------------------------------------------------------------
# orient


def _parse_fix(arcspec: str, g: Graph) -> list[tuple[int, int]]:
    arcs = []
    if not arcspec:
        return arcs
    for part in arcspec.split(","):
        if ">" not in part:
            raise ValueError(f"bad arc {part!r}; use tail>head")
        a, b = part.split(">", 1)
        arcs.append((int(a), int(b)))
    for a, b in arcs:
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.adjacent(a, b):
            raise ValueError(f"({a},{b}) is not an edge of the input graph")
    return arcs


def _classify_types_lines(g: Graph, og) -> int:
    """Print per-vertex type reports and any relative-order violations
    for og; returns a process exit code."""
    sp = split_partition(g)
    if sp is None:
        print("--classify-types needs a split input graph", file=sys.stderr)
        return 1
    try:
        reports = classify_all(sp, og)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    for rep in reports:
        print(json.dumps(rep.to_json()))
    typed = [r for r in reports if r.kind != KIND_INVALID]
    if len(typed) == len(reports):
        for violation in check_relative_order(sp, reports):
            print(json.dumps(violation.to_json()))
    return 0


def cmd_orient(args) -> int:
    parsed, errors = _parse_inputs(args.inputs)
    status = 1 if errors else 0
    for _, g in parsed:
        g6 = write_graph6(g)
        try:
            fixed = _parse_fix(args.fix, g)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        if args.bits is not None:
            try:
                og = orient_by_bits(g, args.bits)
            except ValueError as exc:
                print(str(exc), file=sys.stderr)
                return 1
            verdict = "semi-transitive" if is_semi_transitive(og) else "not-semi-transitive"
            print(f"{g6}\t{args.bits}\t{verdict}")
            if args.dot:
                print(to_dot(og))
            if args.classify_types:
                code = _classify_types_lines(g, og)
                if code:
                    return code
            continue
        if args.count:
            print(f"{g6}\t{count_semi_transitive_extensions(g, fixed)}")
            continue
        if args.all:
            shown = 0
            for og in all_orientations(g):
                if any(not og.has_arc(a, b) for a, b in fixed):
                    continue
                if is_semi_transitive(og):
                    print(f"{g6}\t{orientation_bits(og)}")
                    shown += 1
            if not shown:
                print(f"{g6}\tnone")
            continue
        og = _first_orientation(g, fixed)
        if og is None:
            print(f"{g6}\tnone")
            continue
        print(f"{g6}\t{orientation_bits(og)}")
        if args.dot:
            print(to_dot(og))
        if args.classify_types:
            code = _classify_types_lines(g, og)
            if code:
                return code
    return status


def _first_orientation(g: Graph, fixed) -> OrientedGraph | None:
    if not fixed:
        return find_semi_transitive_orientation(g)
    from .orient import _search_semi_transitive

    _, masks = _search_semi_transitive(g, fixed=tuple(fixed))
    if masks is None:
        return None
    return OrientedGraph._from_out(g, masks)


# ---------------------------------------------------------------------------
# represent


def cmd_represent(args) -> int:
    parsed, errors = _parse_inputs(args.inputs)
    status = 1 if errors else 0
    for _, g in parsed:
        g6 = write_graph6(g)
        if args.check is not None:
            try:
                w = parse_word(args.check)
            except ValueError as exc:
                print(str(exc), file=sys.stderr)
                return 1
            ok = represents(w, g)
            print(f"{g6}\t{'represents' if ok else 'does-not-represent'}")
            status = status or (0 if ok else 2)
            continue
        w = find_representant(g, args.max_uniformity)
        if w is None:
            print(f"{g6}\tnone")
        else:
            print(f"{g6}\t{format_word(w)}")
    return status


# ---------------------------------------------------------------------------
# parser plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordrep",
        description="word-representability of graphs via semi-transitive orientations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify graph6 lines")
    p.add_argument("inputs", nargs="*", help="graph6 files ('-' or none: stdin)")
    p.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    p.add_argument("--witness", action="store_true", help="attach orientation witnesses")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify all isomorphism classes of order n")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=("all", "split", "connected"), default="all")
    p.add_argument("--expected", type=int, default=None,
                   help="exit 2 unless this many non-representable classes are found")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("generate", help="emit a named graph as graph6")
    p.add_argument("tag", help=f"one of: {', '.join(families.family_tags())}")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--orientation", action="store_true",
                   help="also emit the canonical orientation (bits + DOT)")
    p.add_argument("--word", action="store_true",
                   help="also emit the explicit representing word (odd K_TRIANGLE)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("orient", help="semi-transitive orientations of graph6 lines")
    p.add_argument("inputs", nargs="*")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="emit every orientation")
    group.add_argument("--count", action="store_true", help="emit only the count")
    p.add_argument("--fix", default="", metavar="ARCS",
                   help="comma-separated forced arcs, e.g. 0>1,1>2")
    p.add_argument("--bits", default=None, metavar="BITS",
                   help="inspect this exact orientation instead of searching")
    p.add_argument("--dot", action="store_true", help="also emit DOT text")
    p.add_argument("--classify-types", action="store_true",
                   help="print per-vertex type reports (split inputs)")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("represent", help="bounded uniform word search")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--max-uniformity", type=int, default=3)
    p.add_argument("--check", default=None, metavar="WORD",
                   help="verify a word instead of searching")
    p.set_defaults(func=cmd_represent)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except OracleDisagreement as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        return 0


def console_main() -> None:
    sys.exit(main())
