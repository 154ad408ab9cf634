#!/usr/bin/env python3
"""Orders of <alpha, beta> in S_k x S_l next to k! l! (halved when k + l is odd)."""
import math

from fsgraphs.perm import alpha_beta_order

print(f"{'k':>2} {'l':>2} {'order':>8} {'expected':>8}")
for k in range(2, 7):
    for l in range(k, 7):
        want = math.factorial(k) * math.factorial(l) // (2 if (k + l) % 2 else 1)
        got = alpha_beta_order(k, l)
        print(f"{k:>2} {l:>2} {got:>8} {want:>8}{'' if got == want else '   <-- differs'}")
