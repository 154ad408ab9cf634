"""Permutation arithmetic and subgroup closure.

Permutations are tuples of images on 0..m-1. Elements of a direct product
S_k x S_l live on disjoint index blocks of one permutation of degree k+l,
so a single closure routine serves both the cycle-component coset count
and the alpha/beta generation result for stopwatches.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .graph import Partition

Permutation = tuple[int, ...]

DEFAULT_ELEMENT_CAP = 10**7


class ClosureCapExceeded(RuntimeError):
    pass


def identity(m: int) -> Permutation:
    return tuple(range(m))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """p o q, i.e. apply q first."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[i] for i in q)


def invert(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def sign(p: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd."""
    seen = [False] * len(p)
    transpositions = 0
    for i in range(len(p)):
        length = 0
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        if length:
            transpositions += length - 1
    return -1 if transpositions % 2 else 1


def cycle(m: int, points: Sequence[int]) -> Permutation:
    """The cycle (points[0] points[1] ...) on m points."""
    img = list(range(m))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a] = b
    return tuple(img)


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    gens: tuple[Permutation, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise ValueError(f"{g} is not a permutation of degree {self.degree}")


def closure(gs: GeneratorSet, cap: int = DEFAULT_ELEMENT_CAP) -> set[Permutation]:
    """All elements of the group generated by gs, by BFS over right products."""
    e = identity(gs.degree)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gs.gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ClosureCapExceeded(f"closure exceeded {cap} elements")
                queue.append(y)
    return seen


def closure_order(gs: GeneratorSet, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    return len(closure(gs, cap))


def _block_cycle(m: int, start: int, k: int, inverse: bool = False) -> Permutation:
    c = cycle(m, list(range(start, start + k)))
    return invert(c) if inverse else c


def alpha_beta(k: int, l: int) -> GeneratorSet:
    """alpha = ((2 3 .. k), (1 2 .. l)^-1), beta = ((1 2 .. k)^-1, (2 3 .. l))
    on degree k + l, the S_k factor on the first block."""
    if k < 2 or l < 2:
        raise ValueError("alpha/beta need k, l >= 2")
    m = k + l
    alpha = compose(_block_cycle(m, 1, k - 1), _block_cycle(m, k, l, inverse=True))
    beta = compose(_block_cycle(m, 0, k, inverse=True), _block_cycle(m, k + 1, l - 1))
    return GeneratorSet(m, (alpha, beta))


def alpha_beta_order(k: int, l: int, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    return closure_order(alpha_beta(k, l), cap)


def cycle_subgroup_generators(p: Partition) -> GeneratorSet:
    """Rotate class i forward and class j backward, for each ordered pair i != j."""
    n = p.n
    rot = [_block_cycle(n, s, k) for s, k in zip(p.offsets, p.parts)]
    gens = []
    for i in range(p.t):
        for j in range(p.t):
            if i != j:
                g = compose(rot[i], invert(rot[j]))
                if g != identity(n) and g not in gens:
                    gens.append(g)
    return GeneratorSet(n, tuple(gens))


def cycle_subgroup_order(p: Partition, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    """prod(k_i) / gcd(k_i), confirmed against the closure of the rotation generators."""
    if p.t < 2:
        raise ValueError("need at least two classes")
    closed_form = math.prod(p.parts) // p.gcd
    generated = closure_order(cycle_subgroup_generators(p), cap)
    if generated != closed_form:
        raise ArithmeticError(f"{p}: closure gives {generated}, closed form {closed_form}")
    return closed_form


def cycle_component_formula(p: Partition) -> int:
    """Number of components of FS(C_n, K_p): gcd(k) * prod((k_i - 1)!)."""
    if p.t < 2 or p.n < 4:
        raise ValueError("formula needs t >= 2 and n >= 4")
    return p.gcd * math.prod(math.factorial(k - 1) for k in p.parts)


def generated_signs_agree(elements: Iterable[Permutation], k: int) -> bool:
    """Whether every element acts with equal sign on the first k points and the rest."""
    def block_sign(p: Permutation, lo: int, hi: int) -> int:
        return sign([x - lo for x in p[lo:hi]])

    return all(block_sign(e, 0, k) == block_sign(e, k, len(e)) for e in elements)


def order_of_product_group(parts: Sequence[int]) -> int:
    return reduce(lambda a, b: a * b, (math.factorial(k) for k in parts), 1)
