#!/usr/bin/env python3
"""Brute-force component counts of the three exception spiders at every admissible k."""
import time

from fsgraphs.explorer import component_count
from fsgraphs.graph import EXCEPTION_LEGS, complete_bipartite, exception_tree, max_bridge_length
from fsgraphs.oracle import exceptional_table

for name, legs in EXCEPTION_LEGS.items():
    T = exception_tree(name)
    bridge = max_bridge_length(T)
    for k in range(2, T.n // 2 + 1):
        start = time.perf_counter()
        s = component_count(T, complete_bipartite(k, T.n - k))
        secs = time.perf_counter() - start
        print(f"{name} legs={legs} n={T.n} k={k} bridge<k={bridge < k} "
              f"components={s.component_count} sizes={sorted(set(s.component_sizes))} {secs:.3f}s")
print("table:", exceptional_table())
