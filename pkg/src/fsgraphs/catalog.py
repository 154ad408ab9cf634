"""Small-graph catalogues: connected graphs and trees up to isomorphism,
and integer partitions.

Isomorphism classes are deduplicated by a brute-force canonical form: the
maximum graph6-order adjacency code over all relabelings that respect an
equitable colour refinement. The refinement and its colour order are
isomorphism-invariant, so the restricted maximum is still canonical.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .graph import Graph, Partition, is_connected

BUILTIN_MAX_N = 7


def _refine(g: Graph) -> list[int]:
    colors = [0] * g.n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _code(g: Graph, order: tuple[int, ...]) -> int:
    # order[i] = old vertex placed at new position i; bits in graph6 order
    code = 0
    for j in range(1, g.n):
        aj = g.adj[order[j]]
        for i in range(j):
            code = (code << 1) | (order[i] in aj)
    return code


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, code) identical for isomorphic graphs, distinct otherwise."""
    colors = _refine(g)
    cells = [[v for v in range(g.n) if colors[v] == c] for c in sorted(set(colors))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        code = _code(g, tuple(itertools.chain.from_iterable(parts)))
        if best is None or code > best:
            best = code
    return g.n, best


def brute_canonical_form(g: Graph) -> tuple[int, int]:
    """Same contract as canonical_form over all n! relabelings (test oracle)."""
    return g.n, max(_code(g, order) for order in itertools.permutations(range(g.n)))


def canonical_graph(g: Graph) -> Graph:
    n, code = canonical_form(g)
    bits = [(code >> i) & 1 for i in range(n * (n - 1) // 2)][::-1]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Graph.from_edges(n, (pr for pr, b in zip(pairs, bits) if b))


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, ()),)
    # every connected graph has a non-cut vertex, so it arises by attaching
    # a new vertex to a connected graph on n-1 vertices
    found: dict[tuple[int, int], Graph] = {}
    for base in _connected_classes(n - 1):
        for mask in range(1, 1 << (n - 1)):
            edges = base.edges() + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            g = Graph.from_edges(n, edges)
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found, key=lambda k: (found[k].m, k)))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices, in canonical labeling, ordered by edge count then code."""
    if not 1 <= n <= BUILTIN_MAX_N:
        raise ValueError(f"builtin enumerator covers 1 <= n <= {BUILTIN_MAX_N}; "
                         "use a graph6 file for larger n")
    yield from _connected_classes(n)


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, ()),)
    found: dict[tuple[int, int], Graph] = {}
    for base in _tree_classes(n - 1):
        for v in range(n - 1):
            g = Graph.from_edges(n, base.edges() + [(v, n - 1)])
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Non-isomorphic trees on n vertices (leaf augmentation, n <= 10)."""
    if not 1 <= n <= 10:
        raise ValueError("tree enumerator covers 1 <= n <= 10")
    yield from _tree_classes(n)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pr for i, pr in enumerate(pairs) if mask >> i & 1))


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    return (g for g in all_labeled_graphs(n) if is_connected(g))


def partitions_of(n: int, min_t: int = 2, max_t: int | None = None) -> list[Partition]:
    """Ascending partitions of n with at least min_t parts.

    Ordered by number of parts, then lexicographically.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(remaining: int, smallest: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(smallest, remaining + 1):
            acc.append(k)
            rec(remaining - k, k, acc)
            acc.pop()

    rec(n, 1, [])
    hi = n if max_t is None else max_t
    return [Partition(p) for p in sorted(out, key=lambda p: (len(p), p)) if min_t <= len(p) <= hi]
