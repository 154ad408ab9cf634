"""Simple undirected graphs on vertices 0..n-1.

Holds the structural predicates behind the connectivity predictions
(bipartite, cycle, tree, path, k-bridges, cut vertices, the theta_0 graph
and the three exceptional spiders), the special-graph constructors, the
complete multipartite construction, and graph6 I/O.

Vertex ids are 0-based throughout; 1-based labels from the literature map
by subtracting one.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

DEFAULT_CAP = 10
_size_cap = DEFAULT_CAP


def size_cap() -> int:
    return _size_cap


def set_size_cap(n: int) -> None:
    """Raise or lower the vertex cap. Anything above the default warns,
    since the state explorer allocates n! entries."""
    global _size_cap
    if n < 1:
        raise ValueError("size cap must be positive")
    if n > DEFAULT_CAP:
        log.warning(
            "size cap %d exceeds default %d; FS state space has %d states "
            "(~%.1f GB of working memory)",
            n, DEFAULT_CAP, math.factorial(n), math.factorial(n) * n * 40 / 1e9,
        )
    _size_cap = n


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not 1 <= self.n <= _size_cap:
            raise ValueError(f"graph order {self.n} outside 1..{_size_cap}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency at {{{v}, {u}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u}, {v}}} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Partition:
    """Class sizes of a complete multipartite graph, stored ascending.

    Class i occupies the consecutive block offsets[i] .. offsets[i]+parts[i]-1.
    """

    parts: tuple[int, ...]
    offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted(int(k) for k in parts))
        if not parts:
            raise ValueError("partition needs at least one class")
        if parts[0] < 1:
            raise ValueError(f"class sizes must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "offsets", tuple(itertools.accumulate((0,) + parts[:-1])))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def gcd(self) -> int:
        return math.gcd(*self.parts)

    def class_of(self, v: int) -> int:
        for i, (s, k) in enumerate(zip(self.offsets, self.parts)):
            if s <= v < s + k:
                return i
        raise ValueError(f"vertex {v} outside partition of {self.n}")

    def block(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i] + self.parts[i])

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


# ---------------------------------------------------------------------------
# constructors

def complete_multipartite(p: Partition) -> Graph:
    cls = [i for i, k in enumerate(p.parts) for _ in range(k)]
    n = p.n
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if cls[u] != cls[v]))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with classes {0..a-1} and {a..a+b-1}, in the given order."""
    return Graph.from_edges(a + b, ((u, v) for u in range(a) for v in range(a, a + b)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} centred at 0."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def theta0() -> Graph:
    # 6-cycle 0..5 with the extra path 0-6-3
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 3)])


def stopwatch(n: int) -> Graph:
    """An (n-1)-cycle on 1..n-1 plus the pendant edge {0, 1}."""
    if n < 4:
        raise ValueError("stopwatch needs n >= 4")
    cyc = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    return Graph.from_edges(n, cyc + [(0, 1)])


def snake_tongue(length: int) -> Graph:
    """Path 0..length-1 with two extra vertices hanging off its last vertex."""
    if length < 2:
        raise ValueError("snake tongue needs a path of at least 2 vertices")
    tip = length - 1
    edges = [(i, i + 1) for i in range(tip)] + [(tip, length), (tip, length + 1)]
    return Graph.from_edges(length + 2, edges)


def book(k: int, n: int) -> Graph:
    """B_{k,n-k}, i.e. K_{1,...,1,n-k} with k singleton classes."""
    if not 1 <= k < n:
        raise ValueError("book graph needs 1 <= k < n")
    return complete_multipartite(Partition((1,) * k + (n - k,)))


def bipartite_plus_edge(k: int, n: int) -> Graph:
    """K_{k,n-k} (classes {0..k-1}, {k..n-1}) with the extra edge {0, 1}."""
    if not 2 <= k <= n - k:
        raise ValueError("need 2 <= k <= n-k")
    g = complete_bipartite(k, n - k)
    return Graph.from_edges(n, g.edges() + [(0, 1)])


def spider(legs: Sequence[int]) -> Graph:
    """Tree with centre 0 and one path of each given length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


EXCEPTION_LEGS = {"T6": (1, 2, 2), "T7": (2, 2, 2), "T8": (2, 2, 3)}


def exception_tree(name: str) -> Graph:
    return spider(EXCEPTION_LEGS[name])


def construct_special(kind: str, *args: int) -> Graph:
    """Dispatch by name: theta0, stopwatch, snake_tongue, book,
    bipartite_plus_edge, cycle, path, star, complete, T6, T7, T8."""
    builders = {
        "theta0": theta0,
        "stopwatch": stopwatch,
        "snake_tongue": snake_tongue,
        "book": book,
        "bipartite_plus_edge": bipartite_plus_edge,
        "cycle": cycle_graph,
        "path": path_graph,
        "star": star_graph,
        "complete": complete_graph,
    }
    if kind in EXCEPTION_LEGS:
        if args:
            raise ValueError(f"{kind} takes no parameters")
        return exception_tree(kind)
    if kind not in builders:
        raise ValueError(f"unknown special graph {kind!r}")
    return builders[kind](*args)


# ---------------------------------------------------------------------------
# predicates

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(s) == 2 for s in g.adj) and is_connected(g)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(len(s) <= 2 for s in g.adj)


def cut_structure(g: Graph) -> tuple[set[int], set[tuple[int, int]]]:
    """Cut vertices and cut edges via DFS lowlink (iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut_vertices: set[int] = set()
    cut_edges: set[tuple[int, int]] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(sorted(g.adj[u]))))
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent < 0:
                    continue
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    cut_edges.add((min(v, parent), max(v, parent)))
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cut_vertices.add(parent)
        if root_children > 1:
            cut_vertices.add(root)
    return cut_vertices, cut_edges


def cut_vertices(g: Graph) -> set[int]:
    return cut_structure(g)[0]


def max_bridge_length(g: Graph) -> int:
    """Largest k such that g contains a k-bridge.

    A k-bridge (k >= 2) is a path of k vertices whose edges are all cut
    edges, whose interior vertices have degree 2 and whose endpoints are not
    leaves. A lone cut vertex counts as a 1-bridge; 0 means no cut vertex.
    Containing a k-bridge implies containing every shorter one, so
    "has no m-bridge" is ``max_bridge_length(g) < m``.
    """
    cuts, bridges = cut_structure(g)
    deg = [len(s) for s in g.adj]
    chain = {v: [] for v in range(g.n)}
    for u, v in bridges:
        if deg[u] >= 2 and deg[v] >= 2:
            chain[u].append(v)
            chain[v].append(u)
    best = 1 if cuts else 0
    for s in range(g.n):
        for first in chain[s]:
            prev, cur, length = s, first, 2
            while deg[cur] == 2 and len(chain[cur]) == 2:
                prev, cur = cur, chain[cur][0] if chain[cur][1] == prev else chain[cur][1]
                length += 1
            best = max(best, length)
    return best


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex-cut size; n-1 for complete graphs, 0 if disconnected.

    Exact: min over non-adjacent pairs of the number of internally
    vertex-disjoint paths, each found by unit-capacity max flow on the
    vertex-split digraph.
    """
    n = g.n
    if n == 1:
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    if not is_connected(g):
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, _disjoint_paths(g, s, t, best))
    return best


def _disjoint_paths(g: Graph, s: int, t: int, limit: int) -> int:
    # node v splits into v_in = 2v, v_out = 2v+1 with capacity 1 (inf for s, t)
    big = g.n
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {i: [] for i in range(2 * g.n)}

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test with degree pruning (small n only)."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    order = sorted(range(g.n), key=lambda v: -len(g.adj[v]))
    image = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or len(h.adj[w]) != len(g.adj[v]):
                continue
            if all((image[u] in h.adj[w]) == (u in g.adj[v]) for u in order[:i]):
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)


def is_theta0(g: Graph) -> bool:
    return g.n == 7 and g.m == 8 and is_isomorphic(g, theta0())


def spider_legs(g: Graph) -> tuple[int, ...] | None:
    """Sorted leg lengths if g is a tree with exactly one vertex of degree 3
    and all others of degree <= 2; otherwise None."""
    if not is_tree(g):
        return None
    deg = [len(s) for s in g.adj]
    if sorted(deg)[-1] != 3 or deg.count(3) != 1:
        return None
    centre = deg.index(3)
    legs = []
    for first in g.adj[centre]:
        prev, cur, length = centre, first, 1
        while deg[cur] == 2:
            prev, cur = cur, next(u for u in g.adj[cur] if u != prev)
            length += 1
        legs.append(length)
    return tuple(sorted(legs))


def exception_spider(g: Graph) -> str | None:
    legs = spider_legs(g)
    for name, target in EXCEPTION_LEGS.items():
        if legs == target:
            return name
    return None


@dataclass(frozen=True)
class StructuralProfile:
    connected: bool
    bipartite: bool
    is_cycle: bool
    is_tree: bool
    is_path: bool
    is_theta0: bool
    exception_spider: str | None
    max_bridge_length: int
    cut_vertices: frozenset[int]

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["cut_vertices"] = sorted(self.cut_vertices)
        return d


def classify(g: Graph) -> StructuralProfile:
    return StructuralProfile(
        connected=is_connected(g),
        bipartite=is_bipartite(g),
        is_cycle=is_cycle(g),
        is_tree=is_tree(g),
        is_path=is_path(g),
        is_theta0=is_theta0(g),
        exception_spider=exception_spider(g),
        max_bridge_length=max_bridge_length(g),
        cut_vertices=frozenset(cut_vertices(g)),
    )


# ---------------------------------------------------------------------------
# graph6 (short form only, n <= 62)

class Graph6Error(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"graph6 error at byte {pos}: {msg}")
        self.pos = pos


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(">>graph6<<"):
        offset = len(">>graph6<<")
        s = s[offset:]
    if not s:
        raise Graph6Error("empty input", offset)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", offset + i)
    if s[0] == "~":
        raise Graph6Error(f"long-form header (n >= 63) exceeds size cap {_size_cap}", offset)
    n = ord(s[0]) - 63
    if n > _size_cap:
        raise Graph6Error(f"n={n} exceeds size cap {_size_cap}", offset)
    if n == 0:
        raise Graph6Error("graph has no vertices", offset)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} body bytes for n={n}, got {len(body)}",
                          offset + 1 + min(len(body), nbytes))
    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits.extend((x >> (5 - j)) & 1 for j in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", offset + len(s) - 1)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("short-form graph6 supports n <= 62")
    bits = [int(g.has_edge(u, v)) for v in range(1, g.n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc}", exc.pos) from None
    return graphs
