import random

import pytest
from hypothesis import given, strategies as st

from cds_forge import (
    GenSpec,
    NotBiconnectedInputError,
    SolveConfig,
    exact_min_cds,
    gain,
    generate,
    greedy_phase1,
    new_graph,
    snapshot,
    solve,
    verify_certificate,
)

from conftest import complete_edges, cycle_edges


def test_reference_run(p8):
    sol = solve(p8)
    assert sol.nodes == frozenset(range(7))
    assert sol.phase1_nodes == frozenset({0, 3, 4, 6})
    assert sol.t_phase1 == 3
    assert sol.phase1_under_dominated == 0
    assert sol.phase1_component_sizes == (1, 1, 2)  # sorted ascending
    assert not sol.phase1_all_components_biconnected
    assert sol.phase2_added == 3
    assert not sol.fallback_used
    assert sol.certificate.valid
    assert sol.certificate.min_outside_coverage == 2


def test_reference_trace(p8):
    sol = solve(p8)
    phase1 = [s for s in sol.trace if s.phase == 1]
    assert [s.chosen for s in phase1] == [(3,), (6,), (0,), (4,)]
    assert [s.f_after for s in phase1] == [11, 7, 5, 4]
    assert [s.gain.total for s in phase1] == [5, 4, 2, 1]
    # each recorded gain matches an independent recomputation
    c = set()
    for step in phase1:
        y = step.chosen[0]
        assert gain(p8, c, y) == step.gain
        c.add(y)
    phase2 = [s for s in sol.trace if s.phase == 2]
    assert [s.chosen for s in phase2] == [(1, 2), (5,)]
    assert phase2[0].note == "pair-merge 0+1"
    assert phase2[1].note.startswith("repair at")
    assert phase2[-1].f_after == 2


def test_trace_disabled(p8):
    sol = solve(p8, SolveConfig(record_trace=False))
    assert sol.trace == ()
    assert sol.nodes == frozenset(range(7))


def test_greedy_phase1_stall(p8):
    c, trace = greedy_phase1(p8)
    assert c == {0, 3, 4, 6}
    assert snapshot(p8, c).under_dominated == 0
    # stalls because no candidate strictly improves the potential
    outside = set(range(8)) - c
    assert all(gain(p8, c, y).total <= 0 for y in outside)


def test_triangle(triangle):
    sol = solve(triangle)
    assert sol.nodes == frozenset({0, 1, 2})
    assert sol.phase1_nodes == frozenset({0, 1})
    assert sol.t_phase1 == 1
    assert sol.phase2_added == 1
    assert not sol.fallback_used
    assert sol.certificate.valid
    assert sol.certificate.min_outside_coverage is None  # nothing outside


def test_square(c4):
    sol = solve(c4)
    assert sol.phase1_nodes == frozenset({0, 2})
    assert sol.nodes == frozenset(range(4))
    assert sol.phase2_added == 2
    assert not sol.fallback_used
    trace2 = [s for s in sol.trace if s.phase == 2]
    assert trace2[0].chosen == (1, 3)
    assert trace2[0].note == "pair-merge 0+1"


def test_complete_graph(k4):
    sol = solve(k4)
    assert sol.phase1_nodes == frozenset({0, 1})
    assert sol.t_phase1 == 1
    assert sol.nodes == frozenset({0, 1, 2})
    assert sol.phase2_added == 1
    assert len(sol.nodes) == exact_min_cds(k4).theta


def test_higher_fold(k5):
    sol = solve(k5, SolveConfig(m_fold=3))
    assert sol.nodes == frozenset({0, 1, 2})
    assert sol.m_fold == 3
    assert sol.certificate.m_fold == 3
    assert sol.certificate.valid
    notes = [s.note for s in sol.trace if s.phase == 2]
    assert notes.count("grow-small") == 2


def test_cycle_six(c6):
    sol = solve(c6)
    assert sol.phase1_nodes == frozenset({0, 2, 4})
    assert sol.nodes == frozenset(range(6))
    assert sol.fallback_used
    assert sol.certificate.valid
    assert sol.certificate.fallback_used
    assert len(sol.nodes) == exact_min_cds(c6).theta


def test_wheel_ends_valid_after_phase1():
    # hub plus rim: the greedy reaches a biconnected dominating core on its
    # own and the second phase has nothing to do
    g = new_graph(6, [(0, v) for v in range(1, 6)] + [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    sol = solve(g)
    assert sol.nodes == frozenset({0, 1, 2, 3})
    assert sol.t_phase1 == 1
    assert sol.phase2_added == 0
    assert sol.phase1_all_components_biconnected
    assert sol.certificate.valid


def test_input_validation():
    with pytest.raises(NotBiconnectedInputError, match="fewer than 3"):
        solve(new_graph(2, [(0, 1)]))
    with pytest.raises(NotBiconnectedInputError, match="disconnected"):
        solve(new_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(NotBiconnectedInputError, match="cut vertex: 1"):
        solve(new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 1)]))


def test_config_validation():
    with pytest.raises(ValueError):
        SolveConfig(m_fold=1)
    with pytest.raises(ValueError):
        SolveConfig(tie_break="random")
    with pytest.raises(ValueError):
        SolveConfig(phase2_strategy="steiner")


def test_trace_f_values_strictly_decrease_in_phase1(p8, c6, k4):
    for g in (p8, c6, k4):
        sol = solve(g)
        values = [2 * g.n] + [s.f_after for s in sol.trace if s.phase == 1]
        assert all(a > b for a, b in zip(values, values[1:]))


def test_budget_on_reference_solutions(p8, c4, k4, triangle):
    for g in (p8, c4, k4, triangle):
        sol = solve(g)
        if not sol.fallback_used:
            assert sol.phase2_added <= 2 * sol.t_phase1


@given(st.integers(min_value=0, max_value=4000))
def test_solve_random_hosts(seed):
    # asserts only what the implementation guarantees: a valid certificate,
    # a genuine stall (no candidate strictly improves the potential), and
    # determinism.  Whether phase 1 also dominates everything or phase 2
    # stays under twice the component count are separate claims, measured in
    # the acceptance suite, and both have counterexamples.
    n = 5 + seed % 28
    kind = "geometric" if seed % 5 == 0 else "hpath"
    if kind == "geometric":
        try:
            g = generate(GenSpec(kind="geometric", n=max(n, 8), seed=seed, radius=0.55))
        except Exception:
            g = generate(GenSpec(kind="hpath", n=n, seed=seed))
    else:
        g = generate(GenSpec(kind="hpath", n=n, seed=seed, extra=seed % 4))
    sol = solve(g)
    assert sol.certificate.valid
    assert verify_certificate(g, sol.nodes, fallback_used=sol.fallback_used).valid
    assert sol.phase1_nodes <= sol.nodes
    outside = set(range(g.n)) - sol.phase1_nodes
    assert all(gain(g, sol.phase1_nodes, y).total <= 0 for y in outside)
    again = solve(g, SolveConfig(record_trace=False))
    assert again.nodes == sol.nodes


def test_solution_certificate_round_trip(p8):
    sol = solve(p8)
    fresh = verify_certificate(p8, sol.nodes, fallback_used=sol.fallback_used)
    assert fresh == sol.certificate
