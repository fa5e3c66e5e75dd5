"""Optimal-play traces and their pathology scan."""
import pytest

from ograph_pursuit.families import (
    directed_cycle,
    fig2_distance,
    fig3_revisit,
    ring_digraph,
)
from ograph_pursuit.solver import GameSpec, ResourceLimitError, solve_game
from ograph_pursuit.traces import (
    enumerate_optimal_traces,
    extract_trace,
    optimal_trace_analysis,
    trace_distances,
)


def test_trace_length_matches_value():
    table = solve_game(ring_digraph(4), GameSpec(k=1))
    trace = extract_trace(table)
    assert table.capture_time() == 10
    assert trace.rounds == 10 and trace.captured
    first = trace.steps[0]
    assert first.round == 0 and len(first.cops) == 1


def test_trace_json_shape():
    table = solve_game(directed_cycle(3), GameSpec(k=2))
    obj = extract_trace(table).to_json_obj()
    assert obj[0].keys() == {"round", "cops", "robber"}
    assert obj[-1]["robber"] in obj[-1]["cops"]


def test_extract_trace_rejects_robber_win():
    table = solve_game(directed_cycle(3), GameSpec(k=1))
    with pytest.raises(ValueError):
        extract_trace(table)


def test_enumeration_counts_frozen():
    t2 = solve_game(fig2_distance(13), GameSpec(k=1))
    assert len(enumerate_optimal_traces(t2)) == 128
    t3 = solve_game(fig3_revisit(13), GameSpec(k=1))
    assert len(enumerate_optimal_traces(t3)) == 64


def test_enumeration_limit():
    table = solve_game(fig2_distance(13), GameSpec(k=1))
    with pytest.raises(ResourceLimitError):
        enumerate_optimal_traces(table, limit=10)


def test_distance_increase_on_every_optimal_trace():
    analysis = optimal_trace_analysis(fig2_distance(13), k=1)
    assert analysis.capture_time == 8
    assert analysis.distance_increase_exists and analysis.distance_increase_forall
    seq = analysis.distance_witness_seq
    assert seq[0] == 2 and seq[-1] == 0
    # the robber's retreat: cop-to-robber distance jumps from 2 to 6
    assert any(a < b for a, b in zip(seq, seq[1:]))
    assert (2.0, 6.0) in set(zip(seq, seq[1:]))


def test_revisit_on_every_optimal_trace():
    analysis = optimal_trace_analysis(fig3_revisit(13), k=1)
    assert analysis.capture_time == 14
    assert analysis.revisit_exists and analysis.revisit_forall
    trace = analysis.revisit_witness
    visited = [trace.steps[0].cops[0]]
    for step in trace.steps[1:]:
        visited.append(step.cops[0])
    # the cop walks a,v1,...,v12 then returns to v1 before the kill
    assert len(visited) != len(set(visited))


def test_trace_distances_are_finite_until_capture():
    D = fig2_distance(13)
    table = solve_game(D, GameSpec(k=1))
    trace = extract_trace(table)
    seq = trace_distances(D, trace)
    assert len(seq) == len(trace.steps)
    assert seq[-1] == 0
