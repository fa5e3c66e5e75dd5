"""Canonical forms and isomorphism witnesses."""
import random

import pytest

from ograph_pursuit.digraph import Digraph
from ograph_pursuit.families import fig1_counterexample
from ograph_pursuit.isomorphism import (
    MAX_VERTICES,
    canonical_form,
    find_isomorphism,
    isomorphic,
)


def relabel(D, perm):
    return Digraph(D.n, [(perm[u], perm[v]) for u, v in D.arcs])


def test_cycle_rotations_are_isomorphic():
    C4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    rotated = Digraph(4, [(1, 2), (2, 3), (3, 0), (0, 1)])
    assert isomorphic(C4, rotated)
    assert canonical_form(C4) == canonical_form(rotated)


def test_cycle_vs_path():
    C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    P3 = Digraph(3, [(0, 1), (1, 2)])
    assert not isomorphic(C3, P3)
    assert find_isomorphism(C3, P3) is None


def test_canonical_form_invariant_under_permutation():
    D = fig1_counterexample()
    rng = random.Random(7)
    base = canonical_form(D)
    for _ in range(5):
        perm = list(range(D.n))
        rng.shuffle(perm)
        assert canonical_form(relabel(D, perm)) == base


def test_find_isomorphism_returns_valid_map():
    D = fig1_counterexample()
    perm = [(5 * i + 3) % D.n for i in range(D.n)]
    assert sorted(perm) == list(range(D.n))
    other = relabel(D, perm)
    phi = find_isomorphism(D, other)
    assert phi is not None
    mapped = {(phi[u], phi[v]) for u, v in D.arcs}
    assert mapped == set(other.arcs)


def test_reversal_not_isomorphic():
    # out-star vs in-star: same degree multiset overall, opposite orientation
    out_star = Digraph(3, [(0, 1), (0, 2)])
    in_star = Digraph(3, [(1, 0), (2, 0)])
    assert not isomorphic(out_star, in_star)


def test_vertex_cap():
    n = MAX_VERTICES + 1
    big = Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    with pytest.raises(ValueError):
        canonical_form(big)
