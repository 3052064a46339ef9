"""Exhaustive search for exact doubly dominating sets.

A set ``D`` qualifies when ``|N[v] & D| == 2`` for every vertex ``v``. The
search decides vertices in/out and propagates the per-neighbourhood counters:
a neighbourhood already holding two chosen vertices excludes its remaining
undecided members, one that can only just reach two forces them in.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from edds.config import get_settings
from edds.graph import Graph, VertexSet, is_one_regular_on, iter_bits, mask_of

LOGGER = logging.getLogger(__name__)


class SearchBoundExceeded(ValueError):
    """Raised when a graph is larger than the configured search bound."""


class SolverConsistencyError(RuntimeError):
    """Raised when solutions disagree on size; signals a solver bug, never data."""


@dataclass(frozen=True)
class EddsViolation:
    vertex: int
    count: int


@dataclass(frozen=True)
class EddsStats:
    exists: bool
    size: int | None
    count: int


def _members(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


def _set_key(members: VertexSet) -> tuple[int, ...]:
    return tuple(sorted(members))


def verify_edds(graph: Graph, members: Iterable[int]) -> list[EddsViolation]:
    """Every vertex whose closed neighbourhood meets ``members`` other than twice."""

    chosen = mask_of(graph.check_set(members))
    violations: list[EddsViolation] = []
    for v in range(graph.n):
        count = (graph.closed_mask(v) & chosen).bit_count()
        if count != 2:
            violations.append(EddsViolation(vertex=v, count=count))
    return violations


class EddsSearch:
    """One backtracking search over a single graph; holds no shared state."""

    def __init__(self, graph: Graph, *, max_n: int | None = None) -> None:
        bound = get_settings().max_n if max_n is None else max_n
        if graph.n > bound:
            raise SearchBoundExceeded(f"graph on {graph.n} vertices exceeds the search bound {bound}")
        self.graph = graph
        self.nodes = 0
        self._closed = tuple(graph.closed_mask(v) for v in range(graph.n))
        self._full = (1 << graph.n) - 1

    def solutions(self) -> Iterator[VertexSet]:
        """Yield each solution once, in branching order (include before exclude)."""

        if self.graph.n == 0:
            return
        for chosen in self._search(0, 0):
            yield _members(chosen)

    def _propagate(self, chosen: int, excluded: int) -> tuple[int, int] | None:
        changed = True
        while changed:
            changed = False
            for closed in self._closed:
                count = (closed & chosen).bit_count()
                free = closed & ~(chosen | excluded)
                slack = free.bit_count()
                # count > 2 also covers a chosen vertex with two chosen neighbours
                if count > 2 or count + slack < 2:
                    return None
                if not free:
                    continue
                if count == 2:
                    excluded |= free
                    changed = True
                elif count + slack == 2:
                    chosen |= free
                    changed = True
        return chosen, excluded

    def _pivot(self, free: int) -> int:
        best: tuple[int, int] | None = None
        for v, closed in enumerate(self._closed):
            open_members = closed & free
            if open_members:
                key = (open_members.bit_count(), v)
                if best is None or key < best:
                    best = key
        assert best is not None
        open_members = self._closed[best[1]] & free
        return (open_members & -open_members).bit_length() - 1

    def _search(self, chosen: int, excluded: int) -> Iterator[int]:
        self.nodes += 1
        state = self._propagate(chosen, excluded)
        if state is None:
            return
        chosen, excluded = state
        free = self._full & ~(chosen | excluded)
        if not free:
            yield chosen
            return
        bit = 1 << self._pivot(free)
        yield from self._search(chosen | bit, excluded)
        yield from self._search(chosen, excluded | bit)


def find_edds(graph: Graph, *, max_n: int | None = None) -> VertexSet | None:
    search = EddsSearch(graph, max_n=max_n)
    found = next(search.solutions(), None)
    LOGGER.debug("find_edds n=%d nodes=%d found=%s", graph.n, search.nodes, found is not None)
    return found


def enumerate_edds(graph: Graph, *, max_n: int | None = None) -> list[VertexSet]:
    search = EddsSearch(graph, max_n=max_n)
    found = sorted(set(search.solutions()), key=_set_key)
    LOGGER.debug("enumerate_edds n=%d nodes=%d solutions=%d", graph.n, search.nodes, len(found))
    return found


def edds_stats(graph: Graph, *, max_n: int | None = None) -> EddsStats:
    found = enumerate_edds(graph, max_n=max_n)
    if not found:
        return EddsStats(exists=False, size=None, count=0)
    sizes = {len(members) for members in found}
    if len(sizes) != 1:
        raise SolverConsistencyError(f"solutions of unequal sizes {sorted(sizes)} on {graph}")
    for members in found:
        if verify_edds(graph, members) or not is_one_regular_on(graph, members):
            raise SolverConsistencyError(f"solver returned invalid set {sorted(members)} on {graph}")
    return EddsStats(exists=True, size=sizes.pop(), count=len(found))


def naive_edds(graph: Graph) -> list[VertexSet]:
    """Reference enumeration over all ``2^n`` subsets; for small test graphs only."""

    found: list[VertexSet] = []
    if graph.n == 0:
        return found
    for size in range(graph.n + 1):
        for combo in combinations(range(graph.n), size):
            if not verify_edds(graph, combo):
                found.append(frozenset(combo))
    return sorted(found, key=_set_key)


__all__ = [
    "EddsSearch",
    "EddsStats",
    "EddsViolation",
    "SearchBoundExceeded",
    "SolverConsistencyError",
    "edds_stats",
    "enumerate_edds",
    "find_edds",
    "naive_edds",
    "verify_edds",
]
