"""Conversions from library results to the JSON schemas."""
from __future__ import annotations

from typing import Any, Iterable

from edds.characterizations import Decision
from edds.graph import Graph, is_one_regular_on
from edds.graph6 import to_graph6
from edds.schemas import DecisionOut, SolveOut, TagMapOut, VerifyOut, VertexOut, ViolationOut
from edds.solver import EddsStats, EddsViolation, verify_edds
from edds.transforms import TaggedGraph, VertexTag, tag_originals


def vertices_out(target: TaggedGraph, members: Iterable[int]) -> list[VertexOut]:
    return [VertexOut(index=v, tag=target.tags[v].render()) for v in sorted(members)]


def tag_map_out(line: int, target: TaggedGraph) -> TagMapOut:
    return TagMapOut(
        line=line,
        graph6=to_graph6(target.graph),
        tags=vertices_out(target, range(target.graph.n)),
    )


def _render_certificate(certificate: dict[str, Any] | None) -> dict[str, Any] | None:
    if certificate is None:
        return None
    rendered: dict[str, Any] = {}
    for key, value in certificate.items():
        rendered[key] = value
        if key in ("omega", "isolated"):
            rendered[f"{key}_tags"] = [VertexTag.original(v).render() for v in value]
    return rendered


def decision_out(line: int, graph: Graph, decision: Decision) -> DecisionOut:
    witness = None
    witness_valid = None
    if decision.witness is not None:
        witness = vertices_out(decision.target, decision.witness)
        witness_valid = not verify_edds(decision.target.graph, decision.witness)
    return DecisionOut(
        line=line,
        graph6=to_graph6(graph),
        target=decision.target_name,
        target_graph6=to_graph6(decision.target.graph),
        exists=decision.exists,
        reason=decision.reason.value,
        witness=witness,
        witness_valid=witness_valid,
        certificate=_render_certificate(decision.certificate),
    )


def solve_out(line: int, graph: Graph, stats: EddsStats, witness: frozenset[int] | None) -> SolveOut:
    target = tag_originals(graph)
    return SolveOut(
        line=line,
        graph6=to_graph6(graph),
        n=graph.n,
        exists=stats.exists,
        size=stats.size,
        count=stats.count,
        witness=vertices_out(target, witness) if witness is not None else None,
        matching_ok=is_one_regular_on(graph, witness) if witness is not None else None,
    )


def verify_out(line: int, graph: Graph, members: Iterable[int], violations: list[EddsViolation]) -> VerifyOut:
    return VerifyOut(
        line=line,
        graph6=to_graph6(graph),
        members=sorted(members),
        valid=not violations,
        violations=[ViolationOut(vertex=item.vertex, count=item.count) for item in violations],
    )


__all__ = ["decision_out", "solve_out", "tag_map_out", "verify_out", "vertices_out"]
