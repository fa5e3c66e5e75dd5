"""Core digraph/graph containers and orientation enumeration."""
import pytest

from ograph_pursuit.digraph import (
    Digraph,
    Graph,
    INFINITE,
    MAX_ORIENTATION_EDGES,
    bidirected,
    contract,
    directed_distance,
    enumerate_orientations,
    is_strongly_connected,
    orientation_from_mask,
    strong_components,
    structure_profile,
)


def c3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_basic_accessors():
    D = Digraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)], labels=["a", "b", "c", "d"])
    assert D.n == 4 and D.m == 4
    assert D.out_deg(0) == 2 and D.in_deg(0) == 1
    assert D.has_arc(0, 1) and not D.has_arc(1, 0)
    assert D.label(2) == "c"
    assert D.sources() == [] and D.sinks() == [3]
    assert D.is_oriented


def test_duplicate_arcs_collapse():
    assert Digraph(2, [(0, 1), (0, 1)]).m == 1


def test_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        Digraph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Digraph(2, [(0, 2)])


def test_digon_is_not_oriented():
    D = Digraph(2, [(0, 1), (1, 0)])
    assert not D.is_oriented
    assert D.underlying().m == 1


def test_equality_and_hash_ignore_labels():
    a = Digraph(2, [(0, 1)], labels=["x", "y"])
    b = Digraph(2, [(0, 1)])
    assert a == b and hash(a) == hash(b)


def test_strong_components():
    comps, strong = strong_components(c3())
    assert strong and comps == [[0, 1, 2]]
    path = Digraph(3, [(0, 1), (1, 2)])
    comps, strong = strong_components(path)
    assert not strong and comps == [[0], [1], [2]]
    assert is_strongly_connected(c3())
    assert not is_strongly_connected(path)


def test_directed_distance():
    P = Digraph(4, [(0, 1), (1, 2), (2, 3)])
    assert directed_distance(P, 0, 3) == 3
    assert directed_distance(P, 3, 0) is None
    assert directed_distance(P, 1, 1) == 0


def test_structure_profile_c3():
    prof = structure_profile(c3())
    assert prof.sources == () and prof.sinks == ()
    assert prof.is_oriented and prof.is_strong
    assert prof.min_out_degree == prof.max_out_degree == 1
    assert prof.underlying_diameter == 1 and prof.underlying_girth == 3


def test_contract_c4_to_digon():
    C4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    D = contract(C4, [[0, 2], [1, 3]])
    assert D.n == 2 and D.has_arc(0, 1) and D.has_arc(1, 0)


def test_contract_singletons_is_identity():
    D = c3()
    assert contract(D, [[0], [1], [2]]) == D


def test_contract_rejects_non_partition():
    with pytest.raises(ValueError):
        contract(c3(), [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        contract(c3(), [[0], [1]])


def test_enumerate_orientations_k3():
    K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    orientations = list(enumerate_orientations(K3))
    assert len(orientations) == 8
    strong = [D for D in orientations if is_strongly_connected(D)]
    assert len(strong) == 2  # the two rotations of the directed triangle
    for mask, D in enumerate(orientations):
        assert orientation_from_mask(K3, mask) == D


def test_enumerate_orientations_cap():
    n = MAX_ORIENTATION_EDGES + 2
    long_path = Graph(n, [(i, i + 1) for i in range(n - 1)])
    with pytest.raises(ValueError):
        list(enumerate_orientations(long_path))


def test_bidirected():
    D = bidirected(Graph(2, [(0, 1)]))
    assert D.has_arc(0, 1) and D.has_arc(1, 0)
    assert not D.is_oriented


# --- undirected side ---------------------------------------------------------


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def test_graph_basics():
    G = Graph(3, [(0, 1), (1, 2)])
    assert G.degree(1) == 2 and G.has_edge(2, 1)
    assert G.connected_components() == [[0, 1, 2]]
    assert G.is_connected()


def test_bfs_levels_marks_unreachable():
    G = Graph(4, [(0, 1), (1, 2)])
    assert G.bfs_levels(0) == [0, 1, 2, -1]


def test_diameter_and_girth():
    pet = Graph(10, petersen_edges())
    assert pet.diameter() == 2
    assert pet.girth() == 5
    assert Graph(3, [(0, 1), (1, 2)]).girth() == INFINITE
    assert Graph(3, []).diameter() == INFINITE


def test_induced_subgraph():
    G = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    sub, kept = G.induced_subgraph([1, 2, 4])
    assert kept == [1, 2, 4]
    assert sub.n == 3 and sub.m == 1 and sub.has_edge(0, 1)
