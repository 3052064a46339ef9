from dataclasses import fields

import pytest

from edds.characterizations import (
    COMPLEMENT_TARGETS,
    DECIDERS,
    Decision,
    DecisionError,
    Reason,
    ReplayError,
    TargetSpec,
    complement_sets_hold,
    cycle_edds,
    decide,
    expected_size,
    is_omega_witness,
    original_bound_holds,
    original_bound_reached,
    omega_witness,
    path_edds,
    replay_reverse_construction,
)
from edds.graph import GraphError, enumerate_graphs, gen_family, new_graph
from edds.solver import enumerate_edds, find_edds, verify_edds
from edds.transforms import TagKind, subdivision, tag_originals

GRAPH_TARGETS = ("s", "s-bar", "mu", "mu-bar", "m", "m-bar")


def _agrees_with_solver(target_name, graph):
    decision = decide(target_name, graph)
    found = find_edds(decision.target.graph)
    assert decision.exists == (found is not None), (target_name, str(graph))
    if decision.exists:
        assert verify_edds(decision.target.graph, decision.witness) == []


def test_subdivision_of_p3():
    decision = decide("s", gen_family("path", 3))

    assert decision.exists
    assert decision.reason is Reason.WITNESS_FOUND
    assert decision.target.render(decision.witness) == ["v1", "v3", "z(1,2)", "z(2,3)"]
    assert decision.certificate == {"omega": [1]}


@pytest.mark.parametrize(
    "graph, exists, reason",
    [
        (gen_family("complete", 3), True, Reason.WITNESS_FOUND),
        (gen_family("cycle", 6), True, Reason.WITNESS_FOUND),
        (new_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]), True, Reason.WITNESS_FOUND),
        (gen_family("path", 4), False, Reason.MOD3_FAIL),
        (gen_family("complete", 6), False, Reason.NO_OMEGA_WITNESS),
        (gen_family("empty", 3), False, Reason.NO_OMEGA_WITNESS),
        (new_graph(0), False, Reason.EMPTY_GRAPH),
    ],
)
def test_subdivision_decider(graph, exists, reason):
    decision = decide("s", graph)

    assert decision.exists is exists
    assert decision.reason is reason


def test_mycielskian_and_middle_never_have_one():
    for graph in enumerate_graphs(3):
        assert decide("mu", graph).reason is Reason.ALWAYS_NONEXISTENT
        assert not decide("m", graph).exists
    assert decide("mu", new_graph(0)).reason is Reason.EMPTY_GRAPH


def test_isolated_pair_deciders():
    graph = new_graph(4, [(0, 1)])
    for name in ("s-bar", "mu-bar", "m-bar"):
        decision = decide(name, graph)
        assert decision.exists
        assert decision.reason is Reason.ISOLATED_PAIR
        assert decision.certificate == {"isolated": [2, 3]}
        assert decision.target.render(decision.witness) == ["v3", "v4"]

    missing = decide("s-bar", gen_family("complete", 3))
    assert not missing.exists
    assert missing.reason is Reason.ISOLATED_PAIR


def test_complement_middle_of_c4():
    decision = decide("m-bar", gen_family("cycle", 4))

    assert decision.exists
    assert decision.reason is Reason.C4_SPECIAL
    assert decision.witness == frozenset({4, 5, 6, 7})
    assert verify_edds(decision.target.graph, decision.witness) == []


def _complement_sets_ok(graph):
    for name in COMPLEMENT_TARGETS:
        decision = decide(name, graph)
        found = enumerate_edds(decision.target.graph)
        assert complement_sets_hold(name, graph, decision.target, found), (name, str(graph))


def test_complement_targets_only_have_isolated_pairs():
    for n in range(1, 5):
        for graph in enumerate_graphs(n):
            _complement_sets_ok(graph)


@pytest.mark.slow
def test_complement_targets_only_have_isolated_pairs_on_five_vertices():
    for graph in enumerate_graphs(5):
        _complement_sets_ok(graph)


def test_complement_sets_hold_rejects_other_sets():
    graph = new_graph(4, [(0, 1)])
    target = decide("s-bar", graph).target
    assert complement_sets_hold("s-bar", graph, target, [frozenset({2, 3})])
    assert not complement_sets_hold("s-bar", graph, target, [frozenset({0, 1})])
    assert not complement_sets_hold("s-bar", graph, target, [frozenset({2, 3, 4})])

    square = gen_family("cycle", 4)
    edges = decide("m-bar", square).target.vertices_of(TagKind.EDGE)
    assert complement_sets_hold("m-bar", square, decide("m-bar", square).target, [edges])
    assert not complement_sets_hold("s-bar", square, decide("s-bar", square).target, [edges])
    with pytest.raises(GraphError):
        complement_sets_hold("s", square, decide("s", square).target, [])


def test_decision_requires_consistent_witness():
    target = tag_originals(gen_family("path", 2))

    with pytest.raises(DecisionError):
        Decision("path", target, True, Reason.WITNESS_FOUND)
    with pytest.raises(DecisionError):
        Decision("path", target, False, Reason.MOD3_FAIL, frozenset({0, 1}))


def test_unknown_target():
    with pytest.raises(GraphError):
        decide("petersen", gen_family("path", 3))


def test_paths_and_cycles_follow_mod_three():
    assert path_edds(5).witness == frozenset({0, 1, 3, 4})
    assert path_edds(4).reason is Reason.MOD3_FAIL
    assert cycle_edds(6).witness == frozenset({0, 1, 3, 4})
    assert not cycle_edds(4).exists
    assert decide("cycle", gen_family("empty", 9)).exists


def test_paths_and_cycles_agree_with_solver():
    for n in range(1, 16):
        decision = path_edds(n)
        assert decision.exists == (find_edds(decision.target.graph) is not None)
        if decision.exists:
            assert len(decision.witness) == expected_size("path", n)
    for n in range(3, 16):
        decision = cycle_edds(n)
        assert decision.exists == (find_edds(decision.target.graph) is not None)
        if decision.exists:
            assert len(decision.witness) == expected_size("cycle", n)


def test_expected_sizes():
    assert expected_size("path", 5) == 4
    assert expected_size("cycle", 9) == 6
    assert expected_size("s", 6) == 8
    assert expected_size("mu", 4) is None


def test_omega_witness():
    assert omega_witness(gen_family("path", 3)).omega == frozenset({1})
    assert omega_witness(new_graph(0)) is None
    assert omega_witness(gen_family("path", 4)) is None
    assert is_omega_witness(gen_family("path", 3), {1})
    assert not is_omega_witness(gen_family("path", 3), {0})
    assert is_omega_witness(gen_family("cycle", 6), {0, 3})
    assert not is_omega_witness(gen_family("cycle", 6), {0, 2})


def test_deciders_agree_with_solver():
    for n in range(1, 5):
        for graph in enumerate_graphs(n):
            for name in GRAPH_TARGETS:
                _agrees_with_solver(name, graph)


@pytest.mark.slow
def test_deciders_agree_with_solver_on_five_vertices():
    for graph in enumerate_graphs(5):
        for name in GRAPH_TARGETS:
            _agrees_with_solver(name, graph)


@pytest.mark.slow
def test_subdivision_decider_on_six_vertices():
    for graph in enumerate_graphs(6):
        _agrees_with_solver("s", graph)


@pytest.mark.slow
def test_omega_structure_and_vertex_bound_on_six_vertices():
    for graph in enumerate_graphs(6):
        found = omega_witness(graph)
        if found is None:
            continue
        omega = found.omega
        assert len(omega) == 2
        assert all(graph.degree(v) == 2 for v in omega)
        assert all(not (graph.neighbors(v) & omega) for v in omega)
        assert is_omega_witness(graph, omega)
        assert original_bound_holds(graph, enumerate_edds(subdivision(graph).graph))
        assert len(decide("s", graph).witness) == expected_size("s", 6)


def test_subdivision_witness_size():
    for graph in enumerate_graphs(3):
        decision = decide("s", graph)
        if decision.exists:
            assert len(decision.witness) == expected_size("s", 3)


def test_original_vertex_bound():
    for n in range(1, 5):
        for graph in enumerate_graphs(n):
            found = enumerate_edds(subdivision(graph).graph)
            assert original_bound_holds(graph, found)
    path = gen_family("path", 3)
    assert original_bound_holds(path, [frozenset({0, 2, 3, 4})])
    assert not original_bound_holds(path, [frozenset({0, 1, 2})])
    assert not original_bound_holds(new_graph(3, [(0, 1)]), [frozenset({0, 1})])


def test_original_vertex_bound_is_reached_by_p3_and_c3():
    for graph in (gen_family("path", 3), gen_family("cycle", 3)):
        found = enumerate_edds(subdivision(graph).graph)
        assert found
        assert original_bound_reached(graph, found)
        assert original_bound_holds(graph, found)
    longer = gen_family("path", 6)
    assert not original_bound_reached(longer, enumerate_edds(subdivision(longer).graph))


def test_replay_round_trip_on_path():
    graph = gen_family("path", 3)
    result = replay_reverse_construction(graph, decide("s", graph).witness)

    assert result.omega == frozenset({1})
    assert result.host == new_graph(2, [(0, 1)])
    assert result.matching == ((0, 1),)
    assert result.triangle_vertices == frozenset()
    assert result.round_trip_ok


def test_replay_on_six_vertex_path():
    graph = gen_family("path", 6)
    result = replay_reverse_construction(graph, decide("s", graph).witness)

    assert result.omega == frozenset({1, 4})
    assert result.host.n == 4
    assert result.round_trip_ok


def test_replay_detects_triangle():
    graph = gen_family("complete", 3)
    result = replay_reverse_construction(graph, decide("s", graph).witness)

    assert result.triangle_vertices == frozenset({0})
    assert not result.round_trip_ok


@pytest.mark.slow
def test_replay_over_every_solution_up_to_five_vertices():
    triangle_cases = 0
    round_trips = 0
    for n in range(1, 6):
        for graph in enumerate_graphs(n):
            for members in enumerate_edds(subdivision(graph).graph):
                result = replay_reverse_construction(graph, members)
                assert result.round_trip_ok == (not result.triangle_vertices), (str(graph), sorted(members))
                assert result.host.n == 2 * len(result.omega)
                covered = sorted(v for edge in result.matching for v in edge)
                assert covered == list(range(result.host.n))
                if result.triangle_vertices:
                    triangle_cases += 1
                else:
                    round_trips += 1
    assert triangle_cases == 3
    assert round_trips == 3


def test_replay_rejects_non_solutions():
    with pytest.raises(ReplayError):
        replay_reverse_construction(gen_family("path", 3), {0, 1})


def test_registry_lists_every_target():
    assert set(DECIDERS) == set(GRAPH_TARGETS) | {"path", "cycle"}
    assert all(spec.name == name for name, spec in DECIDERS.items())
    assert [field.name for field in fields(TargetSpec)] == ["name", "decide", "family"]
    assert [name for name, spec in DECIDERS.items() if spec.family] == ["path", "cycle"]
