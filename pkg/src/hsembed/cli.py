"""Command-line front end: one-shot queries with stable JSON output.

Four subcommands: ``decide`` (the full verdict ladder), ``leqq`` (just the
constructive partial order), ``spectrum`` (Reeb orbit class tables), and
``poset`` (DOT export of the order's covering relations on a degree range).

Output contract: stdout carries either deterministic JSON (sorted keys,
two-space indent, no volatile fields — byte-stable across runs for equal
inputs) or a short human rendering with ``--human``; ``--out FILE``
additionally writes the full query record including wall time.  Exit codes:
0 = YES/true, 1 = NO/false, 2 = UNKNOWN, 64 = usage error, and 0 for the
purely informational commands.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .engine import LIOUVILLE, MODES, Budget, decide
from .indices import orbit_spectrum
from .model import NO, UNKNOWN, YES, DegreeTuple, EmptyInput, NonPositiveEntry, _jsonify
from .order import leqq

SCHEMA_VERSION = 1
EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class UsageError(Exception):
    """Command-line usage problem; rendered to stderr with exit 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _parse_degrees(text: str, flag: str) -> DegreeTuple:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError(f"{flag} expects a comma-separated list of positive integers")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"{flag}: could not parse {text!r} as integers") from None
    try:
        return DegreeTuple(values)
    except (EmptyInput, NonPositiveEntry) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def build_parser() -> _Parser:
    parser = _Parser(prog="hsembed", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser) -> None:
        out = p.add_mutually_exclusive_group()
        out.add_argument("--json", action="store_true", default=True, dest="as_json")
        out.add_argument("--human", action="store_false", dest="as_json")
        p.add_argument("--out", metavar="FILE", help="also write the full query record")
        p.add_argument("--threads", type=int, default=1, help="search parallelism (default 1)")

    p = sub.add_parser("decide", help="decide an embedding query with evidence")
    p.add_argument("--n", type=int, required=True, help="complex dimension")
    p.add_argument("--source", required=True, help="comma-separated source degrees")
    p.add_argument("--target", required=True, help="comma-separated target degrees")
    p.add_argument("--mode", choices=MODES, default=LIOUVILLE)
    p.add_argument("--q-cap", type=int, default=4, dest="q_cap")
    p.add_argument("--call-cap", type=int, default=10**6, dest="call_cap")
    p.add_argument("--time-cap", type=float, default=None, dest="time_cap")
    add_common(p)

    p = sub.add_parser("leqq", help="decide the constructive partial order")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    add_common(p)

    p = sub.add_parser("spectrum", help="tabulate Reeb orbit classes up to an action cap")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", required=True)
    p.add_argument("--action-cap", type=int, required=True, dest="action_cap")
    add_common(p)

    p = sub.add_parser("poset", help="export the partial order as a DOT graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-sum", type=int, required=True, dest="max_sum")
    p.add_argument("--mode", choices=MODES, default=LIOUVILLE)
    add_common(p)
    return parser


def _require_positive(value: int, flag: str) -> int:
    if not isinstance(value, int) or value < 1:
        raise UsageError(f"{flag} must be a positive integer, got {value!r}")
    return value


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def _record(command: str, inputs: dict, payload: dict) -> dict:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "engine_version": __version__,
        "command": command,
        "inputs": inputs,
    }
    rec.update(payload)
    return rec


def cmd_decide(args: argparse.Namespace) -> Tuple[dict, List[str], int]:
    n = _require_positive(args.n, "--n")
    source = _parse_degrees(args.source, "--source")
    target = _parse_degrees(args.target, "--target")
    threads = _require_positive(args.threads, "--threads")
    try:
        budget = Budget(q_cap=args.q_cap, call_cap=args.call_cap, time_cap=args.time_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = decide(n, source, target, args.mode, budget, threads)
    inputs = {
        "n": n,
        "source": list(source),
        "target": list(target),
        "mode": args.mode,
        "q_cap": budget.q_cap,
        "call_cap": budget.call_cap,
        "time_cap": budget.time_cap,
        "threads": threads,
    }
    record = _record(
        "decide",
        inputs,
        {
            "verdict": verdict.to_json(),
            "search_bounds": verdict.search_bounds,
        },
    )
    lines = [f"verdict: {verdict.kind} ({args.mode})"]
    if verdict.kind == YES:
        lines.append(f"witness: {json.dumps(_jsonify(verdict.witness), sort_keys=True)}")
    elif verdict.kind == NO:
        lines.append(f"certificate: {verdict.certificate.rule}")
    else:
        lines.append(f"reason: {verdict.reason}")
    code = {YES: EXIT_YES, NO: EXIT_NO, UNKNOWN: EXIT_UNKNOWN}[verdict.kind]
    return record, lines, code


def cmd_leqq(args: argparse.Namespace) -> Tuple[dict, List[str], int]:
    source = _parse_degrees(args.source, "--source")
    target = _parse_degrees(args.target, "--target")
    _require_positive(args.threads, "--threads")
    ok, moves = leqq(source, target)
    inputs = {"source": list(source), "target": list(target), "threads": args.threads}
    record = _record(
        "leqq",
        inputs,
        {"result": ok, "moves": moves.to_json() if moves is not None else None},
    )
    lines = [f"leqq: {str(ok).lower()}"]
    if moves is not None:
        rendered = "; ".join(
            f"{m.op}({m.i},{m.j})" if m.j is not None else f"{m.op}({m.i})"
            for m in moves.moves
        )
        lines.append(f"moves: {rendered if rendered else '(empty)'}")
    return record, lines, EXIT_YES if ok else EXIT_NO


def cmd_spectrum(args: argparse.Namespace) -> Tuple[dict, List[str], int]:
    n = _require_positive(args.n, "--n")
    degrees = _parse_degrees(args.degrees, "--degrees")
    _require_positive(args.threads, "--threads")
    if args.action_cap < 0:
        raise UsageError(f"--action-cap must be nonnegative, got {args.action_cap}")
    classes = orbit_spectrum(n, degrees, args.action_cap)
    inputs = {
        "n": n,
        "degrees": list(degrees),
        "action_cap": args.action_cap,
        "threads": args.threads,
    }
    record = _record("spectrum", inputs, {"classes": [oc.to_json() for oc in classes]})
    lines = [f"{len(classes)} orbit classes with action <= {args.action_cap}"]
    for oc in classes:
        lines.append(
            f"action={oc.action} v={oc.v} delta={oc.delta} "
            f"morse={oc.morse_index} cz={oc.cz} homology={oc.homology.coordinates}"
        )
    return record, lines, EXIT_YES


def _integer_partitions(total: int) -> List[Tuple[int, ...]]:
    """All partitions of ``total`` as non-increasing tuples."""
    out: List[Tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(total, total, ())
    return out


def cmd_poset(args: argparse.Namespace) -> Tuple[dict, List[str], int]:
    n = _require_positive(args.n, "--n")
    threads = _require_positive(args.threads, "--threads")
    if args.max_sum < 0:
        raise UsageError(f"--max-sum must be nonnegative, got {args.max_sum}")
    nodes: List[DegreeTuple] = []
    for total in range(n + 1, args.max_sum + 1):
        nodes.extend(DegreeTuple(p) for p in _integer_partitions(total))
    nodes.sort(key=lambda d: (d.total(), d))
    below = {
        (a, b): leqq(a, b)[0] for a in nodes for b in nodes if a != b
    }
    covers = [
        (a, b)
        for (a, b), ok in below.items()
        if ok
        and not any(
            below.get((a, c)) and below.get((c, b))
            for c in nodes
            if c != a and c != b
        )
    ]
    covers.sort(key=lambda e: (e[0].total(), e[0], e[1].total(), e[1]))

    def node_id(d: DegreeTuple) -> str:
        return ",".join(str(e) for e in d)

    dot: List[str] = ["digraph embedding_order {", "  rankdir=BT;"]
    for d in nodes:
        dot.append(f'  "{node_id(d)}" [label="({node_id(d)})"];')
    for a, b in covers:
        verdict = decide(n, a, b, args.mode, threads=threads)
        dot.append(f'  "{node_id(a)}" -> "{node_id(b)}" [label="{verdict.kind}"];')
    dot.append("}")
    text = "\n".join(dot)
    inputs = {"n": n, "max_sum": args.max_sum, "mode": args.mode, "threads": threads}
    record = _record(
        "poset",
        inputs,
        {
            "nodes": [list(d) for d in nodes],
            "covers": [[list(a), list(b)] for a, b in covers],
            "dot": text,
        },
    )
    return record, [text], EXIT_YES


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        started = time.monotonic()
        if args.command == "decide":
            record, lines, code = cmd_decide(args)
        elif args.command == "leqq":
            record, lines, code = cmd_leqq(args)
        elif args.command == "spectrum":
            record, lines, code = cmd_spectrum(args)
        elif args.command == "poset":
            record, lines, code = cmd_poset(args)
        else:  # pragma: no cover - argparse enforces the choices
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "poset":
        # DOT is the stdout contract for poset regardless of --json.
        sys.stdout.write(lines[0] + "\n")
    elif args.as_json:
        sys.stdout.write(_dump(record))
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    if args.out:
        full = dict(record)
        full["wall_time_ms"] = int((time.monotonic() - started) * 1000)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dump(full))
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
