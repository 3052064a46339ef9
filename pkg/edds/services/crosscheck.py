"""Decider-versus-oracle sweeps over graph corpora."""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from edds.characterizations import (
    COMPLEMENT_TARGETS,
    DECIDERS,
    complement_sets_hold,
    expected_size,
    original_bound_holds,
)
from edds.config import get_settings
from edds.graph import Graph, GraphError, enumerate_graphs, gen_family
from edds.graph6 import Graph6Error, load_corpus, parse_graph6, to_graph6
from edds.schemas import CrossCheckRecord, Report, TargetTotals
from edds.solver import SearchBoundExceeded, enumerate_edds, find_edds, verify_edds
from edds.targets import get_target_policy

LOGGER = logging.getLogger(__name__)


class CorpusError(ValueError):
    """Raised when a corpus file cannot be read or decoded."""


@dataclass(frozen=True)
class CheckTask:
    """One (graph, target) pair; plain strings so it pickles into worker processes."""

    target: str
    graph6: str
    original_bound_check: bool = False
    timing: bool = False


def check_graph(task: CheckTask) -> CrossCheckRecord:
    graph = parse_graph6(task.graph6)
    started = time.perf_counter()
    decision = DECIDERS[task.target].decide(graph)
    target = decision.target.graph

    solutions = None
    if decision.exists or task.original_bound_check:
        solutions = enumerate_edds(target)
        oracle_exists = bool(solutions)
    else:
        oracle_exists = find_edds(target) is not None

    witness_valid = None
    size_law_ok = None
    if decision.witness is not None:
        witness_valid = not verify_edds(target, decision.witness)
        size = len(decision.witness)
        size_law_ok = bool(solutions) and all(len(members) == size for members in solutions)
        expected = expected_size(task.target, graph.n)
        if expected is not None:
            size_law_ok = size_law_ok and size == expected

    original_bound_ok = None
    if task.original_bound_check and solutions:
        original_bound_ok = original_bound_holds(graph, solutions)

    all_sets_ok = None
    if task.target in COMPLEMENT_TARGETS and solutions:
        all_sets_ok = complement_sets_hold(task.target, graph, decision.target, solutions)

    elapsed_ms = None
    if task.timing:
        elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)

    return CrossCheckRecord(
        graph6=task.graph6,
        target=task.target,
        decider_exists=decision.exists,
        oracle_exists=oracle_exists,
        witness_valid=witness_valid,
        size_law_ok=size_law_ok,
        original_bound_ok=original_bound_ok,
        all_sets_ok=all_sets_ok,
        elapsed_ms=elapsed_ms,
    )


def exhaustive_corpus(max_n: int, *, allow_large: bool = False) -> list[Graph]:
    """Every labelled graph on ``1..max_n`` vertices, smallest first."""

    settings = get_settings()
    if max_n > settings.exhaustive_max_n and not allow_large:
        raise SearchBoundExceeded(
            f"exhaustive sweep up to n={max_n} exceeds {settings.exhaustive_max_n}; pass --allow-large"
        )
    if max_n > settings.enumeration_limit:
        raise SearchBoundExceeded(
            f"exhaustive sweep up to n={max_n} exceeds the enumeration limit {settings.enumeration_limit}"
        )
    graphs: list[Graph] = []
    for n in range(1, max_n + 1):
        graphs.extend(enumerate_graphs(n))
    return graphs


def family_corpus(family: str, max_n: int) -> list[Graph]:
    start = 3 if family == "cycle" else 1
    return [gen_family(family, n) for n in range(start, max_n + 1)]


def read_corpus(path: Path | str) -> list[Graph]:
    try:
        return load_corpus(path)
    except Graph6Error as exc:
        raise CorpusError(f"{path}: {exc}") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from exc


def _tasks_for(
    target_name: str,
    *,
    max_n: int | None,
    corpus: Sequence[Graph] | None,
    allow_large: bool,
    timing: bool,
) -> list[CheckTask]:
    policy = get_target_policy(target_name)
    family = DECIDERS[target_name].family
    bound = policy.max_n if max_n is None else max_n
    if family is not None:
        # path/cycle deciders only look at n, so they sweep their own family
        graphs = family_corpus(family, bound)
    elif corpus is not None:
        graphs = list(corpus)
    else:
        graphs = exhaustive_corpus(bound, allow_large=allow_large)
    original_bound_check = policy.original_bound_check and target_name == "s"
    return [CheckTask(target_name, to_graph6(graph), original_bound_check, timing) for graph in graphs]


def _run_tasks(tasks: list[CheckTask], jobs: int) -> list[CrossCheckRecord]:
    if jobs <= 1 or len(tasks) < 2:
        return [check_graph(task) for task in tasks]
    chunksize = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order whatever the completion order
        return list(pool.map(check_graph, tasks, chunksize=chunksize))


def run_crosscheck(
    targets: Iterable[str],
    *,
    max_n: int | None = None,
    corpus: Sequence[Graph] | None = None,
    allow_large: bool = False,
    jobs: int | None = None,
    timing: bool = False,
    summary: bool = False,
) -> Report:
    """Run every selected decider against the solver on its corpus.

    Records come back grouped by target in the order given, then in corpus
    order, so two runs with the same flags serialize identically.
    """

    selected = list(dict.fromkeys(targets))
    unknown = [name for name in selected if name not in DECIDERS]
    if unknown:
        raise GraphError(f"unknown target(s): {', '.join(unknown)}")
    workers = get_settings().jobs if jobs is None else jobs

    tasks: list[CheckTask] = []
    for name in selected:
        tasks.extend(
            _tasks_for(name, max_n=max_n, corpus=corpus, allow_large=allow_large, timing=timing)
        )
    LOGGER.info("Cross-checking %d graph/target pairs with %d worker(s)", len(tasks), max(workers, 1))
    records = _run_tasks(tasks, workers)

    totals = {name: TargetTotals(title=get_target_policy(name).title) for name in selected}
    failures: list[CrossCheckRecord] = []
    for record in records:
        bucket = totals[record.target]
        if record.passed:
            bucket.passed += 1
        else:
            bucket.failed += 1
            failures.append(record)
    if failures:
        LOGGER.warning("%d cross-check failure(s)", len(failures))

    return Report(
        graphs=len({task.graph6 for task in tasks}),
        totals=totals,
        failures=failures,
        records=None if summary else records,
    )


__all__ = [
    "CheckTask",
    "CorpusError",
    "check_graph",
    "exhaustive_corpus",
    "family_corpus",
    "read_corpus",
    "run_crosscheck",
]
