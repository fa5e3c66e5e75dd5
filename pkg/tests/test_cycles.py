"""Simple directed cycle enumeration."""
import pytest

from ograph_pursuit.digraph import Digraph, bidirected, Graph
from ograph_pursuit.cycles import simple_directed_cycles
from ograph_pursuit.families import fig1_counterexample


def test_triangle():
    C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    res = simple_directed_cycles(C3)
    assert res.cycles == [(0, 1, 2)] and not res.truncated


def test_dag_has_none():
    dag = Digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert simple_directed_cycles(dag).cycles == []


def test_digon_counts_as_two_cycle():
    res = simple_directed_cycles(Digraph(2, [(0, 1), (1, 0)]))
    assert res.cycles == [(0, 1)]


def test_fig1_has_exactly_five_cycles():
    D = fig1_counterexample()
    res = simple_directed_cycles(D)
    names = sorted(frozenset(D.label(v) for v in cyc) for cyc in res.cycles)
    assert len(res) == 5
    assert sorted(map(sorted, names)) == sorted(map(sorted, [
        {"b", "g", "c"},
        {"b", "g", "e", "f", "d", "c"},
        {"d", "e", "f"},
        {"h", "j", "i"},
        {"j", "k", "l"},
    ]))


def test_max_len_filters():
    D = fig1_counterexample()
    short = simple_directed_cycles(D, max_len=3)
    assert len(short) == 4 and all(len(c) <= 3 for c in short.cycles)


def test_cap_truncates():
    K4 = bidirected(Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]))
    res = simple_directed_cycles(K4, cap=3)
    assert res.truncated and len(res.cycles) == 3
