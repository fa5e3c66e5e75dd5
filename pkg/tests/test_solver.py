"""Exact game solving: hand-checked values, oracle agreement, backends."""
import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ograph_pursuit._backend import available_backends, backend_name, set_backend
from ograph_pursuit.digraph import Digraph, Graph, bidirected
from ograph_pursuit.families import directed_cycle, out_star, petersen_underlying, random_strong_ograph
from ograph_pursuit.oracle import oracle_value
from ograph_pursuit.solver import (
    Confinement,
    FULLY_ACTIVE,
    GameSpec,
    ResourceLimitError,
    STANDARD,
    capture_time,
    cop_number,
    is_cop_dominated,
    safe_vertex_check,
    solve_game,
)


def c3():
    return directed_cycle(3)


# --- hand-checked endgames ---------------------------------------------------


def test_single_vertex_immediate_capture():
    table = solve_game(Digraph(1), GameSpec(k=1))
    assert table.capture_time() == 0
    assert table.optimal_placements() == [(0,)]


def test_one_cop_loses_on_directed_triangle():
    table = solve_game(c3(), GameSpec(k=1))
    assert table.capture_time() is None
    assert table.optimal_placements() == []


def test_two_cops_win_directed_triangle_in_one_round(audited_solve):
    table = audited_solve(c3(), k=2)
    assert table.capture_time() == 1


def test_single_arc():
    # Cop on the tail catches in one round; cop on the head never can.
    D = Digraph(2, [(0, 1)])
    table = solve_game(D, GameSpec(k=1))
    assert table.capture_time() == 1
    assert table.optimal_placements() == [(0,)]
    assert table.placement_value((1,)) is None


def test_mid_round_capture_beats_robber_escape():
    # P3: cop at 0, robber forced to 1 or 2.  Robber at 1 is caught as the
    # cop arrives, before the robber's own move.
    P3 = Digraph(3, [(0, 1), (1, 2)])
    table = solve_game(P3, GameSpec(k=1))
    assert table.value((0,), 1) == 1
    assert table.robber_best_starts((0,)) == [2]


@pytest.mark.parametrize("n", range(3, 13))
def test_directed_cycle_cop_numbers(n):
    D = directed_cycle(n)
    assert cop_number(D, k_max=3, variant=STANDARD) == 2
    assert cop_number(D, k_max=(n + 1) // 2, variant=FULLY_ACTIVE) == (n + 1) // 2


def test_fully_active_requires_positive_out_degree():
    with pytest.raises(ValueError):
        solve_game(out_star(3), GameSpec(k=1, variant=FULLY_ACTIVE))


def test_spec_validation():
    with pytest.raises(ValueError):
        solve_game(Digraph(0), GameSpec(k=1))
    with pytest.raises(ValueError):
        solve_game(c3(), GameSpec(k=0))
    with pytest.raises(ValueError):
        solve_game(c3(), GameSpec(k=1, variant="turbo"))


def test_confinement_validation():
    D = c3()
    with pytest.raises(ValueError):
        solve_game(D, GameSpec(k=1, confinement=Confinement(allowed=())))
    with pytest.raises(ValueError):
        solve_game(D, GameSpec(k=1, confinement=Confinement(allowed=(0, 5))))
    with pytest.raises(ValueError):  # (0, 2) is not an arc
        solve_game(D, GameSpec(k=1, confinement=Confinement((0, 1, 2), (0, 2))))
    with pytest.raises(ValueError):  # cycle leaves the allowed set
        solve_game(D, GameSpec(k=1, confinement=Confinement((0, 1), (0, 1, 2))))


def test_state_budget():
    D = bidirected(petersen_underlying())
    with pytest.raises(ResourceLimitError):
        solve_game(D, GameSpec(k=3), state_budget=100)


# --- oracle agreement --------------------------------------------------------


def all_ographs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), c in zip(pairs, choice):
            if c == 1:
                arcs.append((u, v))
            elif c == 2:
                arcs.append((v, u))
        yield Digraph(n, arcs)


def test_oracle_hand_values():
    assert oracle_value(Digraph(1), GameSpec(k=1)) == 0
    assert oracle_value(c3(), GameSpec(k=1)) is None
    assert oracle_value(c3(), GameSpec(k=2)) == 1
    assert oracle_value(Digraph(2, [(0, 1)]), GameSpec(k=1)) == 1


def test_oracle_rejects_large_inputs():
    with pytest.raises(ValueError):
        oracle_value(directed_cycle(7), GameSpec(k=1))
    with pytest.raises(ValueError):
        oracle_value(c3(), GameSpec(k=3))


def test_solver_matches_oracle_on_all_3_vertex_ographs():
    for D in all_ographs(3):
        for k in (1, 2):
            spec = GameSpec(k=k)
            assert solve_game(D, spec).capture_time() == oracle_value(D, spec)


def test_solver_matches_oracle_on_sampled_5_vertex_digraphs():
    rng = random.Random(11)
    pairs = [(u, v) for u in range(5) for v in range(5) if u != v]
    for _ in range(60):
        arcs = [a for a in pairs if rng.random() < 0.3]
        D = Digraph(5, arcs)
        for k in (1, 2):
            for variant in (STANDARD,) if D.sinks() else (STANDARD, FULLY_ACTIVE):
                spec = GameSpec(k=k, variant=variant)
                assert solve_game(D, spec).capture_time() == oracle_value(D, spec)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3 ** 6 - 1), st.integers(1, 2))
def test_solver_matches_oracle_on_4_vertex_ographs(code, k):
    pairs = list(itertools.combinations(range(4), 2))
    arcs = []
    for (u, v) in pairs:
        code, c = divmod(code, 3)
        if c == 1:
            arcs.append((u, v))
        elif c == 2:
            arcs.append((v, u))
    D = Digraph(4, arcs)
    spec = GameSpec(k=k)
    assert solve_game(D, spec).capture_time() == oracle_value(D, spec)


# --- structural properties ---------------------------------------------------


def test_more_cops_never_hurt():
    rng = random.Random(5)
    for i in range(10):
        D = random_strong_ograph(8, extra_arcs=rng.randrange(6), seed=i)
        prev = None
        for k in (1, 2, 3):
            ct = capture_time(D, k)
            if prev is not None:
                assert ct is not None and ct <= prev
            prev = ct if ct is not None else prev


def test_strong_orientation_defeats_one_cop():
    # no sources and no digons: every vertex has an escape arc
    for i in range(5):
        D = random_strong_ograph(7, extra_arcs=3, seed=i)
        assert cop_number(D, k_max=1) is None


def test_verify_recurrence_flags_tampering():
    table = solve_game(c3(), GameSpec(k=2))
    table.verify_recurrence()
    table.vc[0, 0] += 1
    with pytest.raises(ValueError):
        table.verify_recurrence()


# --- backends ----------------------------------------------------------------


def test_backend_equivalence():
    if "numba" not in available_backends():
        pytest.skip("numba unavailable")
    instances = [
        (bidirected(petersen_underlying()), GameSpec(k=2)),
        (random_strong_ograph(12, extra_arcs=8, seed=3), GameSpec(k=2)),
        (directed_cycle(9), GameSpec(k=3, variant=FULLY_ACTIVE)),
    ]
    tables = {}
    for name in ("numpy", "numba"):
        prev = set_backend(name)
        try:
            assert backend_name() == name
            tables[name] = [solve_game(D, spec) for D, spec in instances]
        finally:
            set_backend(prev)
    for a, b in zip(tables["numpy"], tables["numba"]):
        assert np.array_equal(a.vc, b.vc)
        assert np.array_equal(a.vr, b.vr)


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        set_backend("gpu")


# --- round-level helpers -----------------------------------------------------


def test_safe_vertex_on_transitive_triangle():
    T = Digraph(3, [(0, 1), (0, 2), (1, 2)])
    assert safe_vertex_check(T, robber=0, cops=(2,)) == 0
    assert safe_vertex_check(T, robber=0, cops=(0,)) is None


def test_safe_vertex_rejects_non_tournament():
    P3 = Digraph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        safe_vertex_check(P3, robber=0, cops=(2,))


def test_cop_domination_of_cycles():
    # An isolated directed triangle is not dominated: the robber mirrors the
    # cop's moves and keeps distance two forever.
    assert not is_cop_dominated(c3(), (0, 1, 2))
    # A chord gives the cop a shortcut the confined robber cannot take.
    chorded = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert is_cop_dominated(chorded, (0, 1, 2, 3))
