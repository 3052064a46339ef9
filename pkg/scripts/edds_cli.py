"""Command-line harness for exact doubly dominating set experiments."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from pydantic import BaseModel

from edds.characterizations import DECIDERS, decide
from edds.graph import FAMILIES, Graph, GraphError, gen_family
from edds.graph6 import parse_graph6, write_graph6_lines
from edds.logging_utils import setup_logging
from edds.schemas import LineError
from edds.services.crosscheck import CorpusError, read_corpus, run_crosscheck
from edds.services.rendering import decision_out, solve_out, tag_map_out, verify_out
from edds.solver import SearchBoundExceeded, edds_stats, find_edds, verify_edds
from edds.transforms import TRANSFORMS, TransformError

logger = logging.getLogger("edds.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def emit(model: BaseModel, stream: TextIO | None = None) -> None:
    payload = model.model_dump(mode="json", exclude_none=True)
    print(json.dumps(payload, sort_keys=True), file=stream or sys.stdout)


def _open_input(path: str | None) -> Iterator[str]:
    if path is None:
        yield from sys.stdin
        return
    # undecodable bytes survive as surrogates so parse_graph6 rejects that line
    with open(path, "r", encoding="ascii", errors="surrogateescape") as stream:
        yield from stream


def _numbered_lines(path: str | None) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(_open_input(path), start=1):
        if raw.strip():
            yield number, raw


def _per_line(path: str | None, handle: Callable[[int, Graph], BaseModel]) -> int:
    """Run ``handle`` on each input graph; failures become error lines, not aborts."""

    status = EXIT_OK
    for number, raw in _numbered_lines(path):
        try:
            graph = parse_graph6(raw)
            emit(handle(number, graph))
        except (GraphError, SearchBoundExceeded, TransformError) as exc:
            logger.warning("line %d: %s", number, exc)
            emit(LineError(line=number, error=str(exc)))
            status = EXIT_FAILED
    return status


def parse_vertex_set(text: str) -> list[int]:
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError as exc:
        raise ValueError(f"invalid vertex set {text!r}; expected comma-separated indices") from exc


# --- subcommands ----------------------------------------------------------------
def cmd_gen(args: argparse.Namespace) -> int:
    try:
        graph = gen_family(args.family, args.n)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_graph6_lines([graph], sys.stdout)
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    build = TRANSFORMS[args.op]
    tag_stream = open(args.tags, "w", encoding="utf-8") if args.tags else None
    try:
        for number, raw in _numbered_lines(args.input):
            try:
                target = build(parse_graph6(raw))
                # graphs past the short-form limit fail here, before anything is written
                write_graph6_lines([target.graph], sys.stdout)
                if tag_stream is not None:
                    emit(tag_map_out(number, target), tag_stream)
            except (GraphError, TransformError) as exc:
                print(f"error: line {number}: {exc}", file=sys.stderr)
                return EXIT_FAILED
    finally:
        if tag_stream is not None:
            tag_stream.close()
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    def handle(number: int, graph: Graph) -> BaseModel:
        stats = edds_stats(graph)
        return solve_out(number, graph, stats, find_edds(graph) if stats.exists else None)

    return _per_line(args.input, handle)


def cmd_decide(args: argparse.Namespace) -> int:
    return _per_line(args.input, lambda number, graph: decision_out(number, graph, decide(args.target, graph)))


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        members = parse_vertex_set(args.set)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED

    status = EXIT_OK

    def handle(number: int, graph: Graph) -> BaseModel:
        nonlocal status
        violations = verify_edds(graph, members)
        if violations:
            status = EXIT_FAILED
        return verify_out(number, graph, members, violations)

    return max(_per_line(args.input, handle), status)


def cmd_crosscheck(args: argparse.Namespace) -> int:
    corpus = None
    if args.corpus:
        try:
            corpus = read_corpus(args.corpus)
        except CorpusError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAILED
    try:
        report = run_crosscheck(
            args.targets,
            max_n=args.max_n,
            corpus=corpus,
            allow_large=args.allow_large,
            jobs=args.jobs,
            timing=args.timing,
            summary=args.summary,
        )
    except SearchBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(report)
    return EXIT_OK if report.ok else EXIT_FAILED


# --- parser ------------------------------------------------------------------------
def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", help="graph6 file (defaults to standard input)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact doubly dominating set toolkit")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="Print the graph6 line of a named family member")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("-n", type=int, required=True)
    gen.set_defaults(handler=cmd_gen)

    transform = subparsers.add_parser("transform", help="Apply a graph transform line by line")
    transform.add_argument("--op", choices=sorted(TRANSFORMS), required=True)
    transform.add_argument("--tags", help="Write a JSON Lines tag map for each output graph")
    _add_input(transform)
    transform.set_defaults(handler=cmd_transform)

    solve = subparsers.add_parser("solve", help="Enumerate exact doubly dominating sets")
    _add_input(solve)
    solve.set_defaults(handler=cmd_solve)

    decide_parser = subparsers.add_parser("decide", help="Run a closed-form decider")
    decide_parser.add_argument("--target", choices=list(DECIDERS), required=True)
    _add_input(decide_parser)
    decide_parser.set_defaults(handler=cmd_decide)

    verify = subparsers.add_parser("verify", help="Check a vertex set against each input graph")
    verify.add_argument("--set", required=True, help="Comma-separated 0-based vertex indices")
    _add_input(verify)
    verify.set_defaults(handler=cmd_verify)

    crosscheck = subparsers.add_parser("crosscheck", help="Compare deciders against the solver")
    crosscheck.add_argument("--max-n", dest="max_n", type=int, default=None)
    crosscheck.add_argument("--targets", nargs="+", choices=list(DECIDERS), default=list(DECIDERS))
    crosscheck.add_argument("--corpus", help="graph6 corpus file instead of exhaustive enumeration")
    crosscheck.add_argument("--allow-large", dest="allow_large", action="store_true")
    crosscheck.add_argument("--jobs", type=int, default=None, help="Worker processes (default from EDDS_JOBS)")
    crosscheck.add_argument("--timing", action="store_true", help="Add elapsed_ms to each record")
    crosscheck.add_argument("--summary", action="store_true", help="Omit per-record detail")
    crosscheck.set_defaults(handler=cmd_crosscheck)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    setup_logging()
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    if getattr(args, "max_n", None) is not None and args.max_n < 1:
        parser.error("--max-n must be at least 1")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
