import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsgraphs.catalog import enumerate_connected_graphs, partitions_of
from fsgraphs.explorer import component_count, exchangeable, swap_edges
from fsgraphs.graph import (
    Graph,
    Partition,
    book,
    classify,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    exception_tree,
    max_bridge_length,
    path_graph,
    snake_tongue,
    star_graph,
    theta0,
    vertex_connectivity,
)
from fsgraphs.explorer import all_states
from fsgraphs.oracle import (
    CONNECTED,
    COUNT,
    DISCONNECTED,
    MORE_THAN_TWO,
    SIX,
    TWO,
    UNKNOWN,
    Prediction,
    exceptional_table,
    kappa,
    parity_class,
    predict,
    predict_two_components,
)

P = lambda *parts: Partition(parts)  # noqa: E731


class TestPredict:
    def test_theta0_star(self):
        pred = predict(theta0(), P(1, 6))
        assert pred.verdict == DISCONNECTED and pred.case_tag == "star"
        assert "X is theta0" in pred.reasons

    def test_k4_bipartite_target(self):
        pred = predict(complete_graph(4), P(2, 2))
        assert (pred.verdict, pred.case_tag) == (CONNECTED, "bipartite-target")

    def test_c6_count(self):
        pred = predict(cycle_graph(6), P(1, 2, 3))
        assert (pred.verdict, pred.count, pred.case_tag) == (COUNT, 2, "cycle-formula")

    def test_star_with_pairs(self):
        pred = predict(star_graph(5), P(1, 1, 1, 2))
        assert (pred.verdict, pred.case_tag) == (CONNECTED, "multipartite-pairs")

    def test_path_with_pairs(self):
        assert predict(path_graph(5), P(1, 1, 1, 2)).verdict == DISCONNECTED

    def test_all_ones_follows_x(self):
        assert predict(path_graph(5), P(1, 1, 1, 1, 1)).verdict == CONNECTED
        two_parts = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert predict(two_parts, P(1, 1, 1, 1)).verdict == DISCONNECTED

    @pytest.mark.parametrize("args", [
        (path_graph(4), P(1, 4)),
        (path_graph(3), P(1, 2)),
        (path_graph(4), P(4)),
    ])
    def test_errors(self, args):
        with pytest.raises(ValueError):
            predict(*args)

    def test_count_verdict_needs_positive(self):
        with pytest.raises(ValueError):
            Prediction(COUNT, "x", count=0)

    @pytest.mark.parametrize("n", [4, 5])
    def test_against_brute_force(self, n):
        for X in enumerate_connected_graphs(n):
            prof = classify(X)
            for p in partitions_of(n, 2):
                brute = component_count(X, complete_multipartite(p)).component_count
                assert predict(X, p, prof).matches(brute), (X, p)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(4, 6).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)))
                            .map(lambda es: [(u, v) for u, v in es if u < v]))), st.data())
    def test_labelled_and_disconnected_graphs(self, spec, data):
        n, edges = spec
        X = Graph.from_edges(n, edges)
        p = data.draw(st.sampled_from(partitions_of(n, 2)))
        pred = predict(X, p)
        assert pred.matches(component_count(X, complete_multipartite(p)).component_count)


class TestCycles:
    @pytest.mark.parametrize("n", range(4, 8))
    def test_formula_matches_brute(self, n):
        for p in partitions_of(n, 2):
            expect = p.gcd * math.prod(math.factorial(k - 1) for k in p.parts)
            pred = predict(cycle_graph(n), p)
            assert pred.count == expect
            assert component_count(cycle_graph(n), complete_multipartite(p)).component_count == expect


class TestTwoComponents:
    def test_k23(self):
        assert predict_two_components(complete_bipartite(2, 3), 2).verdict == TWO

    def test_p6_has_bridge(self):
        pred = predict_two_components(path_graph(6), 2)
        assert pred.verdict == MORE_THAN_TWO

    def test_exceptional_table(self):
        # frozen after the brute-force derivation in exceptional_k
        assert exceptional_table() == {"T6": 3, "T7": 3, "T8": 4}

    def test_t6_six(self):
        pred = predict_two_components(exception_tree("T6"), 3)
        assert pred.verdict == SIX
        assert component_count(exception_tree("T6"), complete_bipartite(3, 3)).component_count == 6

    @pytest.mark.parametrize("X, k", [
        (cycle_graph(6), 2), (complete_graph(5), 2), (path_graph(4), 2), (complete_bipartite(2, 3), 3),
    ])
    def test_hypotheses(self, X, k):
        pred = predict_two_components(X, k)
        assert pred.verdict == UNKNOWN and pred.reasons and pred.connected is None

    @pytest.mark.parametrize("n", [5, 6])
    def test_against_brute_force(self, n):
        checked = 0
        for X in enumerate_connected_graphs(n):
            prof = classify(X)
            if not prof.bipartite or prof.is_cycle:
                continue
            for k in range(2, n // 2 + 1):
                count = component_count(X, complete_bipartite(k, n - k)).component_count
                pred = predict_two_components(X, k, prof)
                assert pred.matches(count)
                assert (count == 2) == (pred.verdict == TWO)
                checked += 1
        assert checked > 0


class TestKappa:
    @pytest.mark.parametrize("X, k", [
        (cycle_graph(6), 4), (complete_bipartite(3, 3), 2), (theta0(), 2),
        (path_graph(5), 4), (star_graph(5), 2), (complete_graph(5), 1),
    ])
    def test_examples(self, X, k):
        assert kappa(X) == k

    def test_disconnected(self):
        assert kappa(empty_graph(4)) == math.inf
        assert kappa(Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])) == math.inf

    def test_small_n(self):
        with pytest.raises(ValueError):
            kappa(path_graph(3))

    def test_against_brute_force_n5(self):
        for X in enumerate_connected_graphs(5):
            least = next(k for k in range(1, 5)
                         if component_count(X, book(k, 5)).component_count == 1)
            assert least == kappa(X)


class TestParity:
    def test_examples(self):
        assert parity_class((0, 1, 2, 3, 4), 2, 2) == 0
        assert parity_class((1, 0, 2, 3, 4), 2, 2) == 1

    def test_bounds(self):
        with pytest.raises(ValueError):
            parity_class((0, 1, 2, 3), 2, 2)
        with pytest.raises(ValueError):
            parity_class((0, 1, 2, 3, 4), 1, 2)

    @pytest.mark.parametrize("n, k, l", [(n, k, l) for n in (5, 6) for k in (2, 3) for l in (2, 3)])
    def test_constant_along_friendly_swaps(self, n, k, l):
        X, Y = complete_bipartite(k, n - k), complete_bipartite(l, n - l)
        states = all_states(n)
        src, dst = swap_edges(X, Y)
        for a, b in zip(src, dst):
            assert parity_class(tuple(states[a]), k, l) == parity_class(tuple(states[b]), k, l)

    def test_k23_components_are_parity_fibers(self):
        X = complete_bipartite(2, 3)
        s = component_count(X, X)
        assert s.component_count == 2
        fibers = {}
        for r, sigma in enumerate(all_states(5)):
            fibers.setdefault(int(s.labels[r]), set()).add(parity_class(tuple(sigma), 2, 2))
        assert sorted(map(len, fibers.values())) == [1, 1]
        assert set().union(*fibers.values()) == {0, 1}


def test_bridge_disconnects_when_target_is_thin():
    # an m-bridge in X together with a Y that is not (m+1)-connected
    # always leaves FS(X, Y) disconnected
    hits = 0
    for n in range(4, 7):
        for X in enumerate_connected_graphs(n):
            m = max_bridge_length(X)
            if m == 0:
                continue
            for p in partitions_of(n, 2):
                Y = complete_multipartite(p)
                if vertex_connectivity(Y) <= m:
                    hits += 1
                    assert component_count(X, Y).component_count > 1, (X, p)
    assert hits > 100


@pytest.mark.parametrize("l", [2, 3])
def test_snake_tongue_pair_is_exchangeable(l):
    X = snake_tongue(l)
    n = X.n
    for rest in partitions_of(l, 2):
        p = Partition(rest.parts + (2,))
        Y = complete_multipartite(p)
        i = p.parts.index(2)
        u, v = p.block(i)[:2]
        for sigma in itertools.permutations(range(n)):
            assert exchangeable(X, Y, u, v, sigma)
