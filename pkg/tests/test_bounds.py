"""Lower/upper bound computations and the bound report."""
import pytest

from ograph_pursuit.bounds import (
    MAX_EXACT_VERTICES,
    digraph_lower_bounds,
    domination_number,
    independence_number,
    undirected_bounds,
)
from ograph_pursuit.digraph import Graph, bidirected
from ograph_pursuit.families import (
    alternating_bfs_orientation,
    directed_cycle,
    four_block_projective,
    petersen_underlying,
    random_strong_ograph,
)
from ograph_pursuit.solver import cop_number


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_domination_and_independence_frozen_values():
    pet = petersen_underlying()
    assert domination_number(pet) == 3
    assert independence_number(pet) == 4
    C5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert domination_number(C5) == 2
    assert independence_number(C5) == 2
    K1 = Graph(1)
    assert domination_number(K1) == 1
    assert independence_number(K1) == 1


def test_undirected_bounds_dict():
    assert undirected_bounds(petersen_underlying()) == {
        "domination_number": 3,
        "independence_number": 4,
    }


def test_exact_bounds_refuse_large_graphs():
    big = path_graph(MAX_EXACT_VERTICES + 1)
    with pytest.raises(ValueError):
        domination_number(big)
    with pytest.raises(ValueError):
        independence_number(big)


def test_report_on_alternating_bfs_path():
    D = alternating_bfs_orientation(path_graph(9), root=0)
    rep = digraph_lower_bounds(D)
    assert rep["source_count"].value == 5
    assert not rep["no_source_ge2"].applicable
    assert rep["diam_half"].value == 4
    assert rep["layered_sum"].value == 5
    assert rep.best_lower() == 5
    # the certificate promise holds: >4 cops really are needed
    assert cop_number(D, k_max=4) is None


def test_report_on_strong_orientation():
    D = random_strong_ograph(10, extra_arcs=2, seed=4)
    rep = digraph_lower_bounds(D)
    assert not rep["source_count"].applicable
    assert rep["no_source_ge2"].value == 2
    assert rep.best_lower() >= 2
    assert cop_number(D, k_max=1) is None


def test_girth_bound_applies_only_from_girth_5():
    C5 = directed_cycle(5)
    rep = digraph_lower_bounds(C5)
    assert rep["girth_delta_plus"].applicable
    assert rep["girth_delta_plus"].value == 1
    four = four_block_projective(2)
    entry = digraph_lower_bounds(four)["girth_delta_plus"]
    assert not entry.applicable  # underlying girth is 4
    assert "girth 4" in entry.note


def test_diam_half_needs_certificate():
    rep = digraph_lower_bounds(directed_cycle(6))
    assert not rep["diam_half"].applicable


def test_upper_bounds_on_bidirected_petersen():
    D = bidirected(petersen_underlying())
    rep = digraph_lower_bounds(D)
    assert rep["domination_upper"].kind == "upper"
    assert rep["domination_upper"].value == 3
    assert rep["independence_upper"].value == 4
    assert cop_number(D, k_max=3) == 3  # meets the domination upper bound


def test_report_json():
    obj = digraph_lower_bounds(directed_cycle(5)).to_json_obj()
    names = [e["name"] for e in obj["entries"]]
    assert "layered_sum" in names and "source_count" in names
