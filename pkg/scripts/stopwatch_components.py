#!/usr/bin/env python3
"""Component counts of FS(W_n, K_p) for stopwatch graphs, n = 4..N (default 8)."""
import sys

from fsgraphs.catalog import partitions_of
from fsgraphs.explorer import component_count
from fsgraphs.graph import complete_multipartite, stopwatch

top = int(sys.argv[1]) if len(sys.argv) > 1 else 8
for n in range(4, top + 1):
    for p in partitions_of(n, 2):
        if p.parts[-1] >= n - 1:
            continue
        s = component_count(stopwatch(n), complete_multipartite(p))
        expect = "connected" if (n % 2 == 0 or p.t > 2) else "disconnected"
        print(f"n={n} p={p} components={s.component_count} sizes={sorted(set(s.component_sizes))} expected {expect}")
