"""Exhaustive exploration of the friends-and-strangers graph FS(X, Y).

A state is a bijection sigma: V(X) -> V(Y) stored as a tuple with
sigma[x] the Y-vertex placed on X-vertex x. All n! states are indexed by
their lexicographic rank (Lehmer code), so the state table is a flat
(n!, n) array and component labels are a flat int array.

Components are found by vectorised union-find (hook roots along every
friendly swap, then pointer-jump) which leaves each state labelled by the
smallest rank in its component, i.e. the lexicographically least
bijection. That doubles as the component representative.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .graph import Graph, encode_graph6, size_cap

Bijection = tuple[int, ...]
Edge = tuple[int, int]


def as_bijection(seq: Sequence[int], n: int) -> Bijection:
    sigma = tuple(int(x) for x in seq)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError(f"{list(seq)} is not a bijection on 0..{n - 1}")
    return sigma


def parse_bijection(text: str, n: int) -> Bijection:
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad bijection {text!r}") from None
    return as_bijection(values, n)


def _check_pair(X: Graph, Y: Graph) -> int:
    if X.n != Y.n:
        raise ValueError(f"size mismatch: |V(X)|={X.n}, |V(Y)|={Y.n}")
    if X.n > size_cap():
        raise ValueError(
            f"n={X.n} over cap {size_cap()}: {math.factorial(X.n)} states, "
            f"~{math.factorial(X.n) * X.n * 16 / 1e6:.0f} MB"
        )
    return X.n


# ---------------------------------------------------------------------------
# state indexing

@lru_cache(maxsize=None)
def all_states(n: int) -> np.ndarray:
    """Every permutation of 0..n-1, row r being the one of rank r."""
    table = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        # perms of m = (v, perms of m-1 remapped onto range(m) minus v)
        blocks = []
        for v in range(m):
            rest = table + (table >= v)
            blocks.append(np.hstack([np.full((len(table), 1), v, dtype=np.int8), rest]))
        table = np.vstack(blocks).astype(np.int8)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _place_values(n: int) -> np.ndarray:
    return np.array([math.factorial(n - 1 - i) for i in range(n)], dtype=np.int64)


def rank_states(perms: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row of a (k, n) permutation array."""
    perms = np.asarray(perms)
    k, n = perms.shape
    digits = np.zeros((k, n), dtype=np.int64)
    for i in range(n - 1):
        digits[:, i] = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
    return digits @ _place_values(n)


def rank(sigma: Sequence[int]) -> int:
    n = len(sigma)
    r = 0
    for i in range(n):
        r += sum(1 for j in range(i + 1, n) if sigma[j] < sigma[i]) * math.factorial(n - 1 - i)
    return r


def unrank(r: int, n: int) -> Bijection:
    return tuple(int(x) for x in all_states(n)[r])


def _adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    return a


def swap_edges(X: Graph, Y: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Every FS(X, Y) edge once, as parallel (src, dst) rank arrays with src < dst."""
    n = _check_pair(X, Y)
    P = all_states(n)
    yadj = _adjacency(Y)
    idx = np.arange(len(P))
    srcs, dsts = [], []
    for a, b in X.edges():
        mask = yadj[P[:, a], P[:, b]]
        if not mask.any():
            continue
        moved = P[mask].copy()
        moved[:, [a, b]] = moved[:, [b, a]]
        src, dst = idx[mask], rank_states(moved)
        keep = src < dst
        srcs.append(src[keep])
        dsts.append(dst[keep])
    if not srcs:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(srcs), np.concatenate(dsts)


def _min_labels(size: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    parent = np.arange(size, dtype=np.int64)
    while True:
        # pointer jumping to roots
        while True:
            grand = parent[parent]
            if np.array_equal(grand, parent):
                break
            parent = grand
        ru, rv = parent[src], parent[dst]
        diff = ru != rv
        if not diff.any():
            return parent
        lo = np.minimum(ru[diff], rv[diff])
        hi = np.maximum(ru[diff], rv[diff])
        # hook larger root under smaller; parent values only ever decrease
        np.minimum.at(parent, hi, lo)


@lru_cache(maxsize=128)
def component_labels(X: Graph, Y: Graph) -> np.ndarray:
    """label[r] = least rank in the FS(X, Y) component of state r."""
    n = _check_pair(X, Y)
    src, dst = swap_edges(X, Y)
    labels = _min_labels(math.factorial(n), src, dst)
    labels.setflags(write=False)
    return labels


# ---------------------------------------------------------------------------
# public operations

@dataclass(frozen=True)
class ComponentSummary:
    instance: tuple[str, str]
    component_count: int
    component_sizes: tuple[int, ...]
    representatives: tuple[Bijection, ...]
    labels: np.ndarray = field(repr=False, compare=False)

    def component_index(self, sigma: Sequence[int]) -> int:
        return self.representatives.index(unrank(int(self.labels[rank(sigma)]), len(sigma)))


def friendly_neighbors(X: Graph, Y: Graph, sigma: Sequence[int]) -> list[tuple[Edge, Bijection]]:
    n = _check_pair(X, Y)
    sigma = as_bijection(sigma, n)
    out = []
    for a, b in X.edges():
        if Y.has_edge(sigma[a], sigma[b]):
            nxt = list(sigma)
            nxt[a], nxt[b] = nxt[b], nxt[a]
            out.append(((a, b), tuple(nxt)))
    return out


def component_count(X: Graph, Y: Graph) -> ComponentSummary:
    n = _check_pair(X, Y)
    labels = component_labels(X, Y)
    roots, sizes = np.unique(labels, return_counts=True)
    return ComponentSummary(
        instance=(encode_graph6(X), encode_graph6(Y)),
        component_count=len(roots),
        component_sizes=tuple(int(s) for s in sizes),
        representatives=tuple(unrank(int(r), n) for r in roots),
        labels=labels,
    )


def same_component(X: Graph, Y: Graph, sigma: Sequence[int], tau: Sequence[int]) -> bool:
    n = _check_pair(X, Y)
    sigma, tau = as_bijection(sigma, n), as_bijection(tau, n)
    labels = component_labels(X, Y)
    return bool(labels[rank(sigma)] == labels[rank(tau)])


def apply_swaps(X: Graph, Y: Graph, sigma: Sequence[int], swaps: Sequence[Edge]) -> Bijection:
    """Replay a swap sequence, checking each step is a legal friendly swap."""
    cur = list(sigma)
    for a, b in swaps:
        if not X.has_edge(a, b):
            raise ValueError(f"{(a, b)} is not an edge of X")
        if not Y.has_edge(cur[a], cur[b]):
            raise ValueError(f"swap across {(a, b)} is not friendly from {tuple(cur)}")
        cur[a], cur[b] = cur[b], cur[a]
    return tuple(cur)


def swap_path(X: Graph, Y: Graph, sigma: Sequence[int], tau: Sequence[int]) -> list[Edge] | None:
    """A shortest friendly-swap sequence from sigma to tau, or None."""
    n = _check_pair(X, Y)
    sigma, tau = as_bijection(sigma, n), as_bijection(tau, n)
    if not same_component(X, Y, sigma, tau):
        return None
    parent: dict[Bijection, tuple[Bijection, Edge] | None] = {sigma: None}
    queue = deque([sigma])
    while tau not in parent:
        cur = queue.popleft()
        for edge, nxt in friendly_neighbors(X, Y, cur):
            if nxt not in parent:
                parent[nxt] = (cur, edge)
                queue.append(nxt)
    swaps: list[Edge] = []
    node = tau
    while parent[node] is not None:
        node, edge = parent[node]
        swaps.append(edge)
    swaps.reverse()
    if apply_swaps(X, Y, sigma, swaps) != tau:
        raise RuntimeError("swap path failed to replay")
    return swaps


def transpose_values(sigma: Sequence[int], u: int, v: int) -> Bijection:
    """(u v) o sigma: exchange where the Y-vertices u and v sit."""
    swap = {u: v, v: u}
    return tuple(swap.get(y, y) for y in sigma)


def exchangeable(X: Graph, Y: Graph, u: int, v: int, sigma: Sequence[int]) -> bool:
    """Whether friendly swaps take sigma to (u v) o sigma."""
    if u == v:
        raise ValueError("exchangeable needs two distinct Y-vertices")
    n = _check_pair(X, Y)
    sigma = as_bijection(sigma, n)
    return same_component(X, Y, sigma, transpose_values(sigma, u, v))


@dataclass(frozen=True)
class ExchangeCheck:
    passed: bool
    counterexample: tuple[Bijection, int, int] | None = None


def verify_exchange_criterion(X: Graph, Y: Graph, Y_big: Graph) -> ExchangeCheck:
    """Check that every Y_big-edge {u, v} is (X, Y)-exchangeable from every
    sigma placing u and v on adjacent X-vertices.

    On a pass, the component partitions of FS(X, Y) and FS(X, Y_big) must
    coincide; that is checked too and a violation raises AssertionError.
    The counterexample reported is the one with least sigma rank, then the
    first Y_big-edge in sorted order.
    """
    n = _check_pair(X, Y)
    _check_pair(X, Y_big)
    if not set(Y.edges()) <= set(Y_big.edges()):
        raise ValueError("Y is not a spanning subgraph of Y_big")
    P = all_states(n)
    inv = np.argsort(P, axis=1)
    xadj = _adjacency(X)
    labels = component_labels(X, Y)
    idx = np.arange(len(P))
    worst: tuple[int, int, int] | None = None
    for u, v in Y_big.edges():
        mask = xadj[inv[:, u], inv[:, v]]
        if not mask.any():
            continue
        sub = P[mask]
        moved = np.where(sub == u, v, np.where(sub == v, u, sub))
        bad = labels[idx[mask]] != labels[rank_states(moved)]
        if bad.any():
            r = int(idx[mask][bad][0])
            if worst is None or r < worst[0]:
                worst = (r, u, v)
    if worst is not None:
        r, u, v = worst
        return ExchangeCheck(False, (unrank(r, n), u, v))
    if not np.array_equal(labels, component_labels(X, Y_big)):
        raise AssertionError("exchange criterion passed but component partitions differ")
    return ExchangeCheck(True)
