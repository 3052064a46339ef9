"""Deciders for the existence of exact doubly dominating sets on transformed graphs.

Each decider takes the source graph ``G``, builds the target internally and
returns a :class:`Decision` whose witness is expressed in the target's
coordinates, so ``verify_edds(decision.target.graph, decision.witness)`` is
always a valid independent check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterable

from edds.graph import (
    Edge,
    Graph,
    GraphError,
    VertexSet,
    gen_family,
    is_c4,
    isolated_vertices,
    iter_bits,
)
from edds.solver import verify_edds
from edds.transforms import (
    TagKind,
    TaggedGraph,
    VertexTag,
    contract_edge,
    middle,
    mycielskian,
    subdivide_matching,
    subdivision,
    tag_originals,
)

LOGGER = logging.getLogger(__name__)


class ReplayError(ValueError):
    """Raised when the reverse construction is fed something other than an EDDS of S(G)."""


class DecisionError(ValueError):
    """Raised when a decision reports existence without a witness or the reverse."""


class Reason(str, Enum):
    MOD3_FAIL = "mod3-fail"
    NO_OMEGA_WITNESS = "no-omega-witness"
    ALWAYS_NONEXISTENT = "always-nonexistent"
    ISOLATED_PAIR = "isolated-pair"
    C4_SPECIAL = "c4-special"
    EMPTY_GRAPH = "empty-graph"
    WITNESS_FOUND = "witness-found"


@dataclass(frozen=True)
class Decision:
    target_name: str
    target: TaggedGraph
    exists: bool
    reason: Reason
    witness: VertexSet | None = None
    certificate: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if self.exists != (self.witness is not None):
            raise DecisionError("a decision carries a witness exactly when it reports existence")


@dataclass(frozen=True)
class OmegaWitness:
    """Degree-2 vertices whose open neighbourhoods partition the remaining vertices."""

    omega: VertexSet


# --- paths and cycles ----------------------------------------------------
def _mod3_pattern(n: int) -> VertexSet:
    return frozenset(v for v in range(n) if v % 3 in (0, 1))


def path_edds(n: int) -> Decision:
    target = tag_originals(gen_family("path", n))
    if n % 3 != 2:
        return Decision("path", target, False, Reason.MOD3_FAIL)
    return Decision("path", target, True, Reason.WITNESS_FOUND, _mod3_pattern(n))


def cycle_edds(n: int) -> Decision:
    target = tag_originals(gen_family("cycle", n))
    if n % 3 != 0:
        return Decision("cycle", target, False, Reason.MOD3_FAIL)
    return Decision("cycle", target, True, Reason.WITNESS_FOUND, _mod3_pattern(n))


# --- subdivision -----------------------------------------------------------
def is_omega_witness(graph: Graph, omega: Iterable[int]) -> bool:
    chosen = graph.check_set(omega)
    covered = 0
    for v in chosen:
        mask = graph.masks[v]
        if mask.bit_count() != 2 or mask & covered:
            return False
        covered |= mask
    rest = frozenset(range(graph.n)) - chosen
    return covered == sum(1 << v for v in rest)


def omega_witness(graph: Graph) -> OmegaWitness | None:
    """Exact cover of ``V(G)`` by closed neighbourhoods of degree-2 vertices.

    Covering every vertex exactly once by some ``N[w]`` is the same as asking
    that each vertex is either in the witness or lies in exactly one open
    neighbourhood of a witness vertex.
    """

    n = graph.n
    if n == 0 or n % 3:
        return None
    pieces = {v: graph.closed_mask(v) for v in range(n) if graph.masks[v].bit_count() == 2}
    candidates: list[list[int]] = [[] for _ in range(n)]
    for owner, piece in pieces.items():
        for v in iter_bits(piece):
            candidates[v].append(owner)
    if not all(candidates):
        return None

    def cover(uncovered: int, chosen: list[int]) -> list[int] | None:
        if not uncovered:
            return chosen
        best: list[int] | None = None
        for v in iter_bits(uncovered):
            usable = [owner for owner in candidates[v] if not pieces[owner] & ~uncovered]
            if best is None or len(usable) < len(best):
                best = usable
                if not usable:
                    return None
        for owner in best or ():
            found = cover(uncovered & ~pieces[owner], chosen + [owner])
            if found is not None:
                return found
        return None

    found = cover((1 << n) - 1, [])
    if found is None:
        return None
    return OmegaWitness(frozenset(found))


def subdivision_edds(graph: Graph) -> Decision:
    target = subdivision(graph)
    if graph.n == 0:
        return Decision("s", target, False, Reason.EMPTY_GRAPH)
    if graph.n % 3:
        return Decision("s", target, False, Reason.MOD3_FAIL)
    found = omega_witness(graph)
    if found is None:
        return Decision("s", target, False, Reason.NO_OMEGA_WITNESS)
    omega = found.omega
    witness = {target.index_of(VertexTag.original(v)) for v in range(graph.n) if v not in omega}
    for w in omega:
        witness.update(target.index_of(VertexTag.edge(w, x)) for x in graph.neighbors(w))
    return Decision(
        "s",
        target,
        True,
        Reason.WITNESS_FOUND,
        frozenset(witness),
        {"omega": sorted(omega)},
    )


# --- isolated-pair characterisations -----------------------------------------
def _isolated_pair_decision(name: str, graph: Graph, target: TaggedGraph) -> Decision:
    if graph.n == 0:
        return Decision(name, target, False, Reason.EMPTY_GRAPH)
    isolated = sorted(isolated_vertices(graph))
    if len(isolated) < 2:
        return Decision(name, target, False, Reason.ISOLATED_PAIR)
    pair = isolated[:2]
    witness = frozenset(target.index_of(VertexTag.original(v)) for v in pair)
    return Decision(name, target, True, Reason.ISOLATED_PAIR, witness, {"isolated": pair})


def complement_subdivision_edds(graph: Graph) -> Decision:
    return _isolated_pair_decision("s-bar", graph, subdivision(graph).complemented())


def complement_mycielskian_edds(graph: Graph) -> Decision:
    return _isolated_pair_decision("mu-bar", graph, mycielskian(graph).complemented())


def mycielskian_edds(graph: Graph) -> Decision:
    reason = Reason.EMPTY_GRAPH if graph.n == 0 else Reason.ALWAYS_NONEXISTENT
    return Decision("mu", mycielskian(graph), False, reason)


def middle_edds(graph: Graph) -> Decision:
    reason = Reason.EMPTY_GRAPH if graph.n == 0 else Reason.ALWAYS_NONEXISTENT
    return Decision("m", middle(graph), False, reason)


def complement_middle_edds(graph: Graph) -> Decision:
    target = middle(graph).complemented()
    if is_c4(graph):
        witness = target.vertices_of(TagKind.EDGE)
        certificate = {"edges": [list(edge) for edge in graph.edges()]}
        return Decision("m-bar", target, True, Reason.C4_SPECIAL, witness, certificate)
    return _isolated_pair_decision("m-bar", graph, target)


# --- registry ------------------------------------------------------------------
@dataclass(frozen=True)
class TargetSpec:
    name: str
    decide: Callable[[Graph], Decision]
    family: str | None = None


DECIDERS: dict[str, TargetSpec] = {
    "s": TargetSpec("s", subdivision_edds),
    "s-bar": TargetSpec("s-bar", complement_subdivision_edds),
    "mu": TargetSpec("mu", mycielskian_edds),
    "mu-bar": TargetSpec("mu-bar", complement_mycielskian_edds),
    "m": TargetSpec("m", middle_edds),
    "m-bar": TargetSpec("m-bar", complement_middle_edds),
    "path": TargetSpec("path", lambda g: path_edds(g.n), family="path"),
    "cycle": TargetSpec("cycle", lambda g: cycle_edds(g.n), family="cycle"),
}
COMPLEMENT_TARGETS = ("s-bar", "mu-bar", "m-bar")


def decide(target_name: str, graph: Graph) -> Decision:
    try:
        spec = DECIDERS[target_name]
    except KeyError as exc:
        raise GraphError(f"unknown target '{target_name}'") from exc
    return spec.decide(graph)


def expected_size(target_name: str, n: int) -> int | None:
    """Forced witness size where a closed formula exists, else ``None``."""

    if target_name == "path":
        return 2 * (n + 1) // 3
    if target_name == "cycle":
        return 2 * n // 3
    if target_name == "s":
        return 4 * n // 3
    return None


def complement_sets_hold(
    target_name: str, graph: Graph, target: TaggedGraph, sets: Iterable[VertexSet]
) -> bool:
    """Every EDDS of a complement target is two isolated originals of G, or E(C4) for m-bar."""

    if target_name not in COMPLEMENT_TARGETS:
        raise GraphError(f"'{target_name}' is not a complement target")
    isolated = isolated_vertices(graph)
    edge_vertices = target.vertices_of(TagKind.EDGE)
    c4_allowed = target_name == "m-bar" and is_c4(graph)
    for members in sets:
        if c4_allowed and members == edge_vertices:
            continue
        tags = [target.tags[v] for v in members]
        if len(tags) != 2:
            return False
        if any(tag.kind is not TagKind.ORIGINAL or tag.i not in isolated for tag in tags):
            return False
    return True


def original_bound_holds(graph: Graph, sets: Iterable[VertexSet]) -> bool:
    """Every EDDS of S(G) keeps at most ``n-1`` originals; ``n-1`` only for P3 and C3."""

    n = graph.n
    for members in sets:
        originals = sum(1 for v in members if v < n)
        if originals > n - 1:
            return False
        if originals == n - 1 and not (n == 3 and graph.is_connected()):
            return False
    return True


def original_bound_reached(graph: Graph, sets: Iterable[VertexSet]) -> bool:
    """True when some EDDS of S(G) keeps exactly ``n-1`` originals."""

    n = graph.n
    return any(sum(1 for v in members if v < n) == n - 1 for members in sets)


# --- reverse construction ------------------------------------------------------
@dataclass(frozen=True)
class ReverseConstruction:
    omega: VertexSet
    host: Graph
    matching: tuple[Edge, ...]
    triangle_vertices: VertexSet
    round_trip_ok: bool


def replay_reverse_construction(graph: Graph, members: Iterable[int]) -> ReverseConstruction:
    """Contract one incident edge per witness vertex and rebuild the host graph.

    Witness vertices are the originals missing from ``members``; each is merged
    into its lowest-index neighbour. A witness vertex on a triangle makes the
    contraction collapse a parallel edge, so the round trip cannot return ``G``.
    """

    target = subdivision(graph)
    chosen = target.graph.check_set(members)
    if verify_edds(target.graph, chosen):
        raise ReplayError("the given set is not an exact doubly dominating set of S(G)")
    omega = frozenset(v for v in range(graph.n) if v not in chosen)

    host = graph
    labels = list(range(graph.n))
    triples: list[tuple[int, int, int]] = []
    for w in sorted(omega):
        neighbours = sorted(graph.neighbors(w))
        if len(neighbours) != 2:
            raise ReplayError(f"witness vertex {w} has degree {len(neighbours)}, expected 2")
        a, b = neighbours
        iw, ia = labels.index(w), labels.index(a)
        host = contract_edge(host, (iw, ia))
        labels[min(iw, ia)] = a
        del labels[max(iw, ia)]
        triples.append((w, a, b))

    if host.n != 2 * len(omega):
        raise ReplayError(f"host has {host.n} vertices, expected {2 * len(omega)}")
    position = {label: k for k, label in enumerate(labels)}
    matched = {}
    for w, a, b in triples:
        pa, pb = position[a], position[b]
        matched[(min(pa, pb), max(pa, pb))] = w
    rebuilt = subdivide_matching(host, matched)

    mapping = list(labels) + [matched[edge] for edge in sorted(matched)]
    mapped = {tuple(sorted((mapping[x], mapping[y]))) for x, y in rebuilt.graph.edges()}
    triangles = frozenset(w for w, a, b in triples if graph.has_edge(a, b))
    round_trip_ok = rebuilt.graph.n == graph.n and mapped == set(graph.edges())
    LOGGER.debug(
        "replay omega=%s host_n=%d triangles=%s round_trip=%s",
        sorted(omega),
        host.n,
        sorted(triangles),
        round_trip_ok,
    )
    return ReverseConstruction(
        omega=omega,
        host=host,
        matching=tuple(sorted(matched)),
        triangle_vertices=triangles,
        round_trip_ok=round_trip_ok,
    )


__all__ = [
    "COMPLEMENT_TARGETS",
    "DECIDERS",
    "Decision",
    "DecisionError",
    "OmegaWitness",
    "Reason",
    "ReplayError",
    "ReverseConstruction",
    "TargetSpec",
    "complement_middle_edds",
    "complement_sets_hold",
    "complement_mycielskian_edds",
    "complement_subdivision_edds",
    "cycle_edds",
    "decide",
    "expected_size",
    "is_omega_witness",
    "original_bound_holds",
    "original_bound_reached",
    "middle_edds",
    "mycielskian_edds",
    "omega_witness",
    "path_edds",
    "replay_reverse_construction",
    "subdivision_edds",
]
