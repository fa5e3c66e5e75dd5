"""Line digraphs, coreset partitions, and contraction sequences."""
import itertools

import pytest

from ograph_pursuit.digraph import Digraph, Graph, bidirected, contract, is_strongly_connected
from ograph_pursuit.families import (
    directed_cycle,
    directed_path,
    fig1_counterexample,
    four_block_projective,
    out_star,
)
from ograph_pursuit.isomorphism import isomorphic
from ograph_pursuit.solver import cop_number
from ograph_pursuit.transforms import (
    ContractionError,
    classify_limit_shape,
    contraction_sequence,
    coreset_closure,
    coreset_partition,
    edge_cop_number,
    line_digraph,
)


def test_line_digraph_of_cycle_is_cycle():
    C5 = directed_cycle(5)
    L, arc_of = line_digraph(C5)
    assert L.n == 5 and isomorphic(L, C5)
    assert arc_of == list(C5.arcs)


def test_line_digraph_of_path_shrinks():
    L, _ = line_digraph(directed_path(4))
    assert isomorphic(L, directed_path(3))


def test_line_digraph_labels_name_arcs():
    D = Digraph(2, [(0, 1)], labels=["a", "b"])
    L, _ = line_digraph(D)
    assert L.label(0) == "a->b"


def test_line_digraph_rejects_arcless():
    with pytest.raises(ValueError):
        line_digraph(Digraph(3))


def all_strong_ographs_4():
    pairs = list(itertools.combinations(range(4), 2))
    out = []
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), c in zip(pairs, choice):
            if c == 1:
                arcs.append((u, v))
            elif c == 2:
                arcs.append((v, u))
        D = Digraph(4, arcs)
        if is_strongly_connected(D):
            out.append(D)
    return out


def test_line_digraph_preserves_cop_number_when_strong():
    instances = all_strong_ographs_4()
    assert len(instances) == 66
    for D in instances:
        L, _ = line_digraph(D)
        assert cop_number(L, k_max=3) == cop_number(D, k_max=3)


def test_edge_cop_number():
    assert edge_cop_number(directed_cycle(3)) == 2
    assert edge_cop_number(out_star(4)) == 3


# --- coreset partitions ------------------------------------------------------


def test_coreset_closure_on_cycle_is_trivial():
    C3 = directed_cycle(3)
    assert coreset_closure(C3, {0}) == frozenset({0})


def test_coreset_partition_of_cycle_is_singletons():
    part = coreset_partition(directed_cycle(4))
    assert len(part) == 4
    assert part.blocks == ((0,), (1,), (2,), (3,))
    assert part.block_of(2) == 2


def test_coreset_partition_rejects_sinks():
    with pytest.raises(ValueError) as err:
        coreset_partition(out_star(3))
    assert "sink" in str(err.value)


def test_line_digraph_coresets_contract_back():
    """Contracting L(D) by its coreset partition undoes the line construction.

    With a source present the roundtrip loses it: a source is never the head
    of an arc, so no line-vertex bundle represents it.  fig1 therefore comes
    back as itself minus the source, not as itself.
    """
    D = fig1_counterexample()
    L, _ = line_digraph(D)
    part = coreset_partition(L)
    assert len(part) == 11
    back = contract(L, part.blocks)
    keep = [v for v in range(D.n) if D.label(v) != "a"]
    arcs = [(keep.index(u), keep.index(v))
            for (u, v) in D.arcs if u in keep and v in keep]
    minus_source = Digraph(len(keep), arcs)
    assert isomorphic(back, minus_source)
    assert not isomorphic(back, D)


def test_line_digraph_coresets_roundtrip_strong():
    for D in all_strong_ographs_4()[:12]:
        L, _ = line_digraph(D)
        part = coreset_partition(L)
        assert len(part) == D.n
        assert isomorphic(contract(L, part.blocks), D)


def test_four_block_coresets_are_the_blocks():
    D = four_block_projective(2)
    part = coreset_partition(D)
    assert len(part) == 4
    assert {frozenset(b) for b in part.blocks} == \
        {frozenset(v) for v in D.meta["blocks"].values()}


# --- limit shapes and contraction sequences ----------------------------------


def test_classify_limit_shapes():
    assert classify_limit_shape(directed_path(4)) == "directed_path"
    assert classify_limit_shape(directed_cycle(5)) == "cycle_with_tail"
    tailed = Digraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert classify_limit_shape(tailed) == "cycle_with_tail"
    assert classify_limit_shape(fig1_counterexample()) is None
    assert classify_limit_shape(bidirected(Graph(3, [(0, 1), (1, 2), (0, 2)]))) is None


def test_contraction_sequence_already_limit():
    seq = contraction_sequence(directed_cycle(6))
    assert seq.steps == 0 and seq.limit_shape == "cycle_with_tail"
    assert seq.limit_cop_number == 2


def test_contraction_sequence_four_block():
    seq = contraction_sequence(four_block_projective(2))
    assert seq.steps == 1
    assert seq.limit.n == 4 and seq.limit_shape == "cycle_with_tail"
    assert seq.limit_cop_number == 2


def test_contraction_sequence_fig1_collapses_to_point():
    seq = contraction_sequence(fig1_counterexample())
    assert seq.limit.n == 1 and seq.limit_shape == "directed_path"
    assert seq.limit_cop_number == 1
    assert len(seq.iterates) == seq.steps + 1


def test_contraction_sequence_digon():
    seq = contraction_sequence(bidirected(Graph(2, [(0, 1)])))
    assert seq.limit_shape == "cycle_with_tail" and seq.limit_cop_number == 1


def test_contraction_sequence_sink_error():
    with pytest.raises(ContractionError) as err:
        contraction_sequence(out_star(3))
    assert err.value.iterates


def test_contraction_sequence_max_steps():
    with pytest.raises(ContractionError):
        contraction_sequence(four_block_projective(2), max_steps=0)


def test_sequence_json_shape():
    obj = contraction_sequence(four_block_projective(2)).to_json_obj()
    assert obj["steps"] == 1
    assert obj["limit_shape"] == "cycle_with_tail"
