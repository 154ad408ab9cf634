"""Closed-form predictions for FS(X, K_{k1,...,kt}).

Each function returns a Prediction naming the rule that fired, so sweep
reports can say which branch produced a mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph import (
    EXCEPTION_LEGS,
    Graph,
    Partition,
    StructuralProfile,
    classify,
    complete_bipartite,
    exception_tree,
    max_bridge_length,
)
from .perm import cycle_component_formula, sign

CONNECTED = "connected"
DISCONNECTED = "disconnected"
COUNT = "count"
TWO = "two_components"
SIX = "six_components"
MORE_THAN_TWO = "more_than_two"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Prediction:
    verdict: str
    case_tag: str
    reasons: tuple[str, ...] = ()
    count: int | None = None

    def __post_init__(self):
        if self.verdict == COUNT and (self.count is None or self.count < 1):
            raise ValueError("count verdict needs a positive count")

    @property
    def connected(self) -> bool | None:
        """Connectivity implied by the verdict, None when it says nothing."""
        if self.verdict == CONNECTED:
            return True
        if self.verdict == COUNT:
            return self.count == 1
        if self.verdict in (DISCONNECTED, TWO, SIX, MORE_THAN_TWO):
            return False
        return None

    def matches(self, brute_count: int) -> bool | None:
        if self.verdict == COUNT:
            return brute_count == self.count
        if self.verdict == TWO:
            return brute_count == 2
        if self.verdict == SIX:
            return brute_count == 6
        if self.verdict == MORE_THAN_TWO:
            return brute_count > 2
        if self.connected is None:
            return None
        return self.connected == (brute_count == 1)

    def as_dict(self) -> dict:
        d = {"verdict": self.verdict, "case": self.case_tag, "reasons": list(self.reasons)}
        if self.count is not None:
            d["count"] = self.count
        return d


def _failures(prof: StructuralProfile, *, bipartite=False, cycle=True, theta=False,
              bridge: int | None = None, path=False) -> list[str]:
    out = []
    if not prof.connected:
        out.append("X disconnected")
    if bipartite and prof.bipartite:
        out.append("X bipartite")
    if cycle and prof.is_cycle:
        out.append("X is a cycle")
    if theta and prof.is_theta0:
        out.append("X is theta0")
    if bridge is not None and prof.max_bridge_length >= bridge:
        out.append(f"X contains a {bridge}-bridge (longest {prof.max_bridge_length})")
    if path and prof.is_path:
        out.append("X is a path")
    return out


def _verdict(tag: str, failed: list[str]) -> Prediction:
    if failed:
        return Prediction(DISCONNECTED, tag, tuple(failed))
    return Prediction(CONNECTED, tag)


def predict(X: Graph, p: Partition, profile: StructuralProfile | None = None) -> Prediction:
    """Connectivity of FS(X, K_p) from the structure of X alone."""
    n = p.n
    if X.n != n:
        raise ValueError(f"size mismatch: |V(X)|={X.n}, partition of {n}")
    if n < 4:
        raise ValueError("predictions need n >= 4")
    if p.t < 2:
        raise ValueError("predictions need at least two classes")
    prof = profile or classify(X)
    k1, kt, t = p.parts[0], p.parts[-1], p.t

    if prof.is_cycle:
        return Prediction(COUNT, "cycle-formula", ("X is a cycle",), cycle_component_formula(p))
    if kt == 1:
        # Y = K_n: connected exactly when X is
        return _verdict("complete-target", _failures(prof, cycle=False))

    cases = [
        kt == n - 1,
        t == 2 and k1 >= 2,
        t > 2 and (kt > 2 or p.gcd > 1),
        t > 2 and k1 == 1 and kt == 2,
    ]
    if sum(cases) != 1:
        raise AssertionError(f"partition {p} hits cases {cases}")
    if cases[0]:
        return _verdict("star", _failures(prof, bipartite=True, theta=True, bridge=1))
    if cases[1]:
        return _verdict("bipartite-target", _failures(prof, bipartite=True, bridge=k1))
    if cases[2]:
        return _verdict("multipartite-large-class", _failures(prof, bridge=n - kt))
    return _verdict("multipartite-pairs", _failures(prof, cycle=False, path=True))


@lru_cache(maxsize=None)
def exceptional_k(name: str) -> int | None:
    """The k at which the named exception tree gives six components.

    Derived by brute force: among the admissible k (n >= 2k >= 4) at which
    the tree has no k-bridge, the one where FS(T, K_{k,n-k}) has exactly six
    components. None if no admissible k does.
    """
    from .explorer import component_count

    tree = exception_tree(name)
    n = tree.n
    bridge = max_bridge_length(tree)
    hits = [
        k for k in range(2, n // 2 + 1)
        if bridge < k and component_count(tree, complete_bipartite(k, n - k)).component_count == 6
    ]
    if len(hits) > 1:
        raise AssertionError(f"{name} is exceptional at several k: {hits}")
    return hits[0] if hits else None


def exceptional_table() -> dict[str, int | None]:
    return {name: exceptional_k(name) for name in EXCEPTION_LEGS}


def predict_two_components(X: Graph, k: int, profile: StructuralProfile | None = None) -> Prediction:
    """Whether FS(X, K_{k,n-k}) has exactly two components (X bipartite)."""
    n = X.n
    prof = profile or classify(X)
    reasons = []
    if n < 5:
        reasons.append("n < 5")
    if not (n >= 2 * k >= 4):
        reasons.append(f"k={k} outside n >= 2k >= 4")
    if not prof.connected:
        reasons.append("X disconnected")
    if not prof.bipartite:
        reasons.append("X not bipartite")
    if prof.is_cycle:
        reasons.append("X is a cycle")
    if reasons:
        return Prediction(UNKNOWN, "two-component-hypotheses", tuple(reasons))
    if prof.max_bridge_length >= k:
        return Prediction(MORE_THAN_TWO, "bridge-splits-further",
                          (f"X contains a {k}-bridge (longest {prof.max_bridge_length})",))
    if prof.exception_spider is not None and exceptional_k(prof.exception_spider) == k:
        return Prediction(SIX, "exception-tree", (f"X is {prof.exception_spider}",))
    return Prediction(TWO, "two-component")


def kappa(X: Graph, profile: StructuralProfile | None = None) -> float:
    """Least k with FS(X, B_{k,n-k}) connected; math.inf if X is disconnected."""
    if X.n < 4:
        raise ValueError("kappa needs n >= 4")
    prof = profile or classify(X)
    if not prof.connected:
        return math.inf
    if prof.is_cycle:
        return X.n - 2
    if prof.bipartite and not prof.cut_vertices:
        return 2
    if prof.is_theta0:
        return 2
    return prof.max_bridge_length + 1


def parity_class(sigma: Sequence[int], k: int, l: int) -> int:
    """Parity of sgn(sigma) + |sigma({0..k-1}) & {0..l-1}|, odd sign counted as 1.

    Labels the two components of FS(K_{k,n-k}, K_{l,n-l}) when both graphs
    carry their size-k (size-l) class on the first block.
    """
    n = len(sigma)
    if not (2 <= k < n and 2 <= l < n and n >= 5):
        raise ValueError(f"parity class needs 2 <= k, l < n and n >= 5 (k={k}, l={l}, n={n})")
    odd = 1 if sign(sigma) < 0 else 0
    meet = sum(1 for x in range(k) if sigma[x] < l)
    return (odd + meet) % 2
