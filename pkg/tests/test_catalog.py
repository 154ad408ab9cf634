import random

import networkx as nx
import pytest
from hypothesis import given, settings

from fsgraphs.catalog import (
    BUILTIN_MAX_N,
    brute_canonical_form,
    canonical_form,
    canonical_graph,
    connected_labeled_graphs,
    enumerate_connected_graphs,
    enumerate_trees,
    partitions_of,
)
from fsgraphs.graph import Partition, is_isomorphic

from conftest import graphs, to_nx

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


@pytest.mark.parametrize("n, count", sorted(CONNECTED_COUNTS.items()))
def test_connected_counts(n, count):
    gs = list(enumerate_connected_graphs(n))
    assert len(gs) == count
    assert all(nx.is_connected(to_nx(g)) for g in gs)


def test_builtin_limit():
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(BUILTIN_MAX_N + 1))


@pytest.mark.parametrize("n, count", sorted(TREE_COUNTS.items()))
def test_tree_counts(n, count):
    ts = list(enumerate_trees(n))
    assert len(ts) == count
    assert all(nx.is_tree(to_nx(t)) for t in ts)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_pairwise_non_isomorphic(n):
    gs = list(enumerate_connected_graphs(n))
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            if a.m == b.m:
                assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def test_pairwise_non_isomorphic_sample_n7():
    gs = list(enumerate_connected_graphs(7))
    rng = random.Random(3)
    for _ in range(2000):
        a, b = rng.sample(gs, 2)
        assert canonical_form(a) != canonical_form(b)


def test_labelled_graphs_cover_every_class():
    classes = {canonical_form(g) for g in enumerate_connected_graphs(5)}
    assert {canonical_form(g) for g in connected_labeled_graphs(5)} == classes


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6))
def test_canonical_form_is_invariant(g):
    perm = list(range(g.n))
    random.Random(g.m).shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(canonical_graph(g), g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_separates_like_brute_force(a, b):
    same = brute_canonical_form(a) == brute_canonical_form(b)
    assert (canonical_form(a) == canonical_form(b)) == same
    if a.n == b.n:
        assert same == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_partitions_examples():
    assert set(partitions_of(4, 2)) == {Partition(x) for x in [(1, 3), (2, 2), (1, 1, 2), (1, 1, 1, 1)]}
    assert len(partitions_of(4, 2)) == 4
    assert len(partitions_of(5, 2)) == 6
    assert partitions_of(4, 4) == [Partition((1, 1, 1, 1))]


def test_partitions_order_and_bounds():
    ps = partitions_of(7, 2, 3)
    keys = [(p.t, p.parts) for p in ps]
    assert keys == sorted(keys)
    assert all(2 <= p.t <= 3 and p.n == 7 for p in ps)
    # p(7) = 15, minus the single-part partition
    assert len(partitions_of(7, 2)) == 14
