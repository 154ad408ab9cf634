"""Independent oracles shared by the test modules.

Nothing here imports the explorer or the predicate code it checks: FS
graphs are rebuilt from itertools.permutations and handed to networkx,
bridges are found by deleting edges one at a time.
"""

import itertools

import networkx as nx
from hypothesis import strategies as st

from fsgraphs.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def fs_nx(X: Graph, Y: Graph) -> nx.Graph:
    ys = {frozenset(e) for e in Y.edges()}
    G = nx.Graph()
    for s in itertools.permutations(range(X.n)):
        G.add_node(s)
        for a, b in X.edges():
            if frozenset((s[a], s[b])) in ys:
                t = list(s)
                t[a], t[b] = t[b], t[a]
                G.add_edge(s, tuple(t))
    return G


def fs_component_sizes(X: Graph, Y: Graph) -> list[int]:
    return sorted(len(c) for c in nx.connected_components(fs_nx(X, Y)))


def brute_max_bridge(g: Graph) -> int:
    """Longest k-bridge by enumerating every simple path (tiny graphs only)."""
    G = to_nx(g)
    ncomp = nx.number_connected_components(G)

    def cut_edge(u, v):
        H = G.copy()
        H.remove_edge(u, v)
        return nx.number_connected_components(H) > ncomp

    def cut_vertex(v):
        H = G.copy()
        H.remove_node(v)
        return nx.number_connected_components(H) > ncomp

    deg = dict(G.degree())
    best = 1 if any(cut_vertex(v) for v in G) else 0
    for s, t in itertools.permutations(G.nodes, 2):
        if deg[s] == 1 or deg[t] == 1:
            continue
        for path in nx.all_simple_paths(G, s, t):
            if all(deg[v] == 2 for v in path[1:-1]) and all(
                cut_edge(a, b) for a, b in zip(path, path[1:])
            ):
                best = max(best, len(path))
    return best


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    edges = list(chosen)
    if connected:
        # random spanning tree first
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.append((order[j], order[i]))
    return Graph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
