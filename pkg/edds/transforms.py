"""Graph constructions carrying a provenance tag for every produced vertex.

Vertex layout is deterministic: original vertices in index order, then edge
vertices in lexicographic ``(i, j)`` order, then shadows, then the apex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from edds.graph import Edge, Graph, VertexSet, complement, new_graph


class TransformError(ValueError):
    """Raised when a construction receives arguments it cannot honour."""


class TagKind(str, Enum):
    ORIGINAL = "original"
    EDGE = "edge"
    SHADOW = "shadow"
    APEX = "apex"


@dataclass(frozen=True)
class VertexTag:
    kind: TagKind
    i: int | None = None
    j: int | None = None

    @classmethod
    def original(cls, i: int) -> "VertexTag":
        return cls(TagKind.ORIGINAL, i)

    @classmethod
    def edge(cls, i: int, j: int) -> "VertexTag":
        if i == j:
            raise TransformError(f"edge vertex needs distinct endpoints, got ({i}, {j})")
        return cls(TagKind.EDGE, min(i, j), max(i, j))

    @classmethod
    def shadow(cls, i: int) -> "VertexTag":
        return cls(TagKind.SHADOW, i)

    @classmethod
    def apex(cls) -> "VertexTag":
        return cls(TagKind.APEX)

    def render(self) -> str:
        """Human-facing name, 1-based: ``v3``, ``z(2,5)``, ``u4``, ``w``."""

        if self.kind is TagKind.ORIGINAL:
            return f"v{self.i + 1}"
        if self.kind is TagKind.EDGE:
            return f"z({self.i + 1},{self.j + 1})"
        if self.kind is TagKind.SHADOW:
            return f"u{self.i + 1}"
        return "w"


@dataclass(frozen=True)
class TaggedGraph:
    graph: Graph
    tags: tuple[VertexTag, ...]
    source_n: int
    _index: dict[VertexTag, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.tags) != self.graph.n:
            raise TransformError(f"{len(self.tags)} tags for {self.graph.n} vertices")
        index = {tag: position for position, tag in enumerate(self.tags)}
        if len(index) != len(self.tags):
            raise TransformError("vertex tags must be unique")
        object.__setattr__(self, "_index", index)

    def index_of(self, tag: VertexTag) -> int:
        try:
            return self._index[tag]
        except KeyError as exc:
            raise TransformError(f"no vertex tagged {tag.render()}") from exc

    def vertices_of(self, kind: TagKind) -> VertexSet:
        return frozenset(k for k, tag in enumerate(self.tags) if tag.kind is kind)

    def render(self, members: Iterable[int]) -> list[str]:
        return [self.tags[v].render() for v in sorted(members)]

    def complemented(self) -> "TaggedGraph":
        return TaggedGraph(complement(self.graph), self.tags, self.source_n)


def tag_originals(graph: Graph) -> TaggedGraph:
    return TaggedGraph(graph, tuple(VertexTag.original(i) for i in range(graph.n)), graph.n)


def _normalise_edges(edges: Iterable[tuple[int, int]]) -> list[Edge]:
    return sorted({(min(u, v), max(u, v)) for u, v in edges})


def subdivision(graph: Graph) -> TaggedGraph:
    """Replace every edge ``vi vj`` with the path ``vi - z(i,j) - vj``."""

    edges = graph.edges()
    n = graph.n
    new_edges: list[Edge] = []
    for offset, (i, j) in enumerate(edges):
        z = n + offset
        new_edges.extend(((i, z), (j, z)))
    tags = tuple(VertexTag.original(i) for i in range(n)) + tuple(
        VertexTag.edge(i, j) for i, j in edges
    )
    return TaggedGraph(new_graph(n + len(edges), new_edges), tags, n)


def subdivide_matching(host: Graph, matching: Iterable[tuple[int, int]]) -> TaggedGraph:
    """1-subdivide only the edges of ``matching``; the other edges are kept."""

    chosen = _normalise_edges(matching)
    covered: set[int] = set()
    for i, j in chosen:
        if not host.has_edge(i, j):
            raise TransformError(f"({i}, {j}) is not an edge of the host graph")
        if i in covered or j in covered:
            raise TransformError(f"edges sharing an endpoint at ({i}, {j}) do not form a matching")
        covered.update((i, j))

    n = host.n
    chosen_set = set(chosen)
    new_edges = [edge for edge in host.edges() if edge not in chosen_set]
    for offset, (i, j) in enumerate(chosen):
        z = n + offset
        new_edges.extend(((i, z), (j, z)))
    tags = tuple(VertexTag.original(i) for i in range(n)) + tuple(
        VertexTag.edge(i, j) for i, j in chosen
    )
    return TaggedGraph(new_graph(n + len(chosen), new_edges), tags, n)


def mycielskian(graph: Graph) -> TaggedGraph:
    """Order ``2n+1``: originals, shadows ``u_i`` at ``n+i``, apex ``w`` last."""

    n = graph.n
    apex = 2 * n
    new_edges: list[Edge] = list(graph.edges())
    for i, j in graph.edges():
        new_edges.extend(((i, n + j), (j, n + i)))
    new_edges.extend((n + i, apex) for i in range(n))
    tags = (
        tuple(VertexTag.original(i) for i in range(n))
        + tuple(VertexTag.shadow(i) for i in range(n))
        + (VertexTag.apex(),)
    )
    return TaggedGraph(new_graph(2 * n + 1, new_edges), tags, n)


def _incidence_pairs(edges: list[Edge]) -> list[Edge]:
    """Pairs of edge positions whose edges share an endpoint."""

    pairs: list[Edge] = []
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if set(edges[a]) & set(edges[b]):
                pairs.append((a, b))
    return pairs


def line_graph(graph: Graph) -> TaggedGraph:
    edges = graph.edges()
    tags = tuple(VertexTag.edge(i, j) for i, j in edges)
    return TaggedGraph(new_graph(len(edges), _incidence_pairs(edges)), tags, graph.n)


def middle(graph: Graph) -> TaggedGraph:
    """Subdivision plus the line-graph adjacencies among the edge vertices."""

    n = graph.n
    edges = graph.edges()
    new_edges: list[Edge] = []
    for offset, (i, j) in enumerate(edges):
        new_edges.extend(((i, n + offset), (j, n + offset)))
    new_edges.extend((n + a, n + b) for a, b in _incidence_pairs(edges))
    tags = tuple(VertexTag.original(i) for i in range(n)) + tuple(
        VertexTag.edge(i, j) for i, j in edges
    )
    return TaggedGraph(new_graph(n + len(edges), new_edges), tags, n)


def contract_edge(graph: Graph, edge: tuple[int, int]) -> Graph:
    """Merge the endpoints of ``edge`` into the lower index; later indices shift down.

    Parallel edges collapse and no loop is created.
    """

    u, v = min(edge), max(edge)
    if not graph.has_edge(u, v):
        raise TransformError(f"({u}, {v}) is not an edge")

    def relabel(x: int) -> int:
        if x == v:
            return u
        return x - 1 if x > v else x

    new_edges = set()
    for a, b in graph.edges():
        if {a, b} == {u, v}:
            continue
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            new_edges.add((min(ra, rb), max(ra, rb)))
    return new_graph(graph.n - 1, sorted(new_edges))


def complement_tagged(graph: Graph) -> TaggedGraph:
    return tag_originals(complement(graph))


TRANSFORMS = {
    "subdivision": subdivision,
    "mycielskian": mycielskian,
    "middle": middle,
    "line": line_graph,
    "complement": complement_tagged,
}


__all__ = [
    "TRANSFORMS",
    "TagKind",
    "TaggedGraph",
    "TransformError",
    "VertexTag",
    "complement_tagged",
    "contract_edge",
    "line_graph",
    "middle",
    "mycielskian",
    "subdivide_matching",
    "subdivision",
    "tag_originals",
]
