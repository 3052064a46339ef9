"""Simple undirected graphs on vertices ``0..n-1`` with bit-set adjacency."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import networkx as nx

from edds.config import get_settings

VertexSet = frozenset[int]
Edge = tuple[int, int]

FAMILIES = ("path", "cycle", "star", "complete", "empty")


class GraphError(ValueError):
    """Raised for malformed graphs, vertex indices or generator arguments."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``masks[v]`` holds the neighbours of ``v`` as bits."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.masks):
            if mask & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(mask):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # --- basic queries --------------------------------------------------
    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def check_set(self, members: Iterable[int]) -> VertexSet:
        result = frozenset(members)
        for v in result:
            self.check_vertex(v)
        return result

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return frozenset(iter_bits(self.masks[v]))

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | 1 << v

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""

        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.masks) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= self.masks[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# --- constructors ---------------------------------------------------------
def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a simple graph; duplicate pairs collapse, loops and bad indices raise."""

    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def from_networkx(nx_graph: nx.Graph) -> Graph:
    nodes = sorted(nx_graph.nodes())
    if nodes != list(range(len(nodes))):
        nx_graph = nx.convert_node_labels_to_integers(nx_graph, ordering="sorted")
    return new_graph(nx_graph.number_of_nodes(), nx_graph.edges())


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


# --- operations -------------------------------------------------------------
def closed_neighborhood(graph: Graph, v: int) -> VertexSet:
    graph.check_vertex(v)
    return frozenset(iter_bits(graph.closed_mask(v)))


def complement(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    return Graph(graph.n, tuple(full & ~graph.closed_mask(v) for v in range(graph.n)))


def isolated_vertices(graph: Graph) -> VertexSet:
    return frozenset(v for v, mask in enumerate(graph.masks) if not mask)


def is_one_regular_on(graph: Graph, members: Iterable[int]) -> bool:
    """True iff every vertex of ``members`` has exactly one neighbour inside it."""

    chosen = graph.check_set(members)
    inside = mask_of(chosen)
    return all((graph.masks[v] & inside).bit_count() == 1 for v in chosen)


def is_c4(graph: Graph) -> bool:
    return (
        graph.n == 4
        and all(mask.bit_count() == 2 for mask in graph.masks)
        and graph.is_connected()
    )


def gen_family(family: str, n: int) -> Graph:
    """Canonical labelled member of a named family; star centre is vertex 0."""

    if family not in FAMILIES:
        raise GraphError(f"unknown family '{family}', expected one of {', '.join(FAMILIES)}")
    minimum = 3 if family == "cycle" else 1
    if n < minimum:
        raise GraphError(f"family '{family}' requires n >= {minimum}, got {n}")
    if family == "path":
        return new_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        return new_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "star":
        return new_graph(n, [(0, i) for i in range(1, n)])
    if family == "complete":
        return new_graph(n, combinations(range(n), 2))
    return new_graph(n)


def vertex_pairs(n: int) -> list[Edge]:
    """Upper-triangle pairs in column-major order, the graph6 bit order."""

    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_graphs(n: int, *, limit: int | None = None) -> Iterator[Graph]:
    """Yield every labelled simple graph on ``n`` vertices exactly once.

    Bit ``k`` of the running counter selects the ``k``-th pair of
    :func:`vertex_pairs`, so graphs come out in counter order.
    """

    bound = get_settings().enumeration_limit if limit is None else limit
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if n > bound:
        raise GraphError(f"enumeration of n={n} exceeds the bound {bound}")
    pairs = vertex_pairs(n)
    for code in range(1 << len(pairs)):
        yield new_graph(n, (pair for k, pair in enumerate(pairs) if code >> k & 1))


__all__ = [
    "Edge",
    "FAMILIES",
    "Graph",
    "GraphError",
    "VertexSet",
    "closed_neighborhood",
    "complement",
    "enumerate_graphs",
    "from_networkx",
    "gen_family",
    "is_c4",
    "iter_bits",
    "is_one_regular_on",
    "isolated_vertices",
    "mask_of",
    "new_graph",
    "to_networkx",
    "vertex_pairs",
]
