"""graph6 short-form codec backed by networkx."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import networkx as nx

from edds.graph import Graph, GraphError, from_networkx, to_networkx

LOGGER = logging.getLogger(__name__)
HEADER = ">>graph6<<"
MAX_SHORT_N = 62


class Graph6Error(GraphError):
    """Raised when a graph6 line cannot be decoded or a graph cannot be encoded."""


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    for position, char in enumerate(line):
        if not 63 <= ord(char) <= 126:
            raise Graph6Error(f"malformed character {char!r} at offset {position}")
    if ord(line[0]) - 63 > MAX_SHORT_N:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    try:
        decoded = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise Graph6Error(f"invalid graph6 line {line!r}: {exc}") from exc
    return from_networkx(decoded)


def to_graph6(graph: Graph) -> str:
    if graph.n > MAX_SHORT_N:
        raise Graph6Error(f"graph on {graph.n} vertices needs long-form graph6")
    encoded = nx.to_graph6_bytes(to_networkx(graph), header=False)
    return encoded.decode("ascii").strip()


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line, numbering from 1."""

    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            yield number, parse_graph6(raw)
        except Graph6Error as exc:
            raise Graph6Error(f"line {number}: {exc}") from exc


def load_corpus(path: Path | str) -> list[Graph]:
    corpus_path = Path(path)
    with corpus_path.open("r", encoding="ascii") as stream:
        graphs = [graph for _, graph in read_graph6_lines(stream)]
    LOGGER.debug("Loaded %d graphs from %s", len(graphs), corpus_path)
    return graphs


def write_graph6_lines(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for graph in graphs:
        stream.write(to_graph6(graph) + "\n")
        count += 1
    return count


__all__ = [
    "Graph6Error",
    "MAX_SHORT_N",
    "load_corpus",
    "parse_graph6",
    "read_graph6_lines",
    "to_graph6",
    "write_graph6_lines",
]
