"""Paths, chain pairs, the projection pr, and its constructive inverse.

Run:  python demos/03_paths_and_pairs.py
"""

from macpath.dbg import ReflectionOrder
from macpath.pqls import (enumerate_pairs, enumerate_paths, lift_path,
                          pr_pair)
from macpath.root_system import root_system_from_label

rs = root_system_from_label("A2")
lam = (1, 1)
w0 = rs.longest_element()
mu = w0.apply_weight(lam)

paths = list(enumerate_paths(rs, lam))
print(f"{len(paths)} paths of shape {lam}:")
for p in paths:
    print(f"  {p!r}   wt = {p.wt(lam)}")

order = ReflectionOrder(rs, lam, mu)
pairs = list(enumerate_pairs(rs, lam, mu, order))
print(f"\n{len(pairs)} chain pairs for mu = {mu}:")
for pair in pairs:
    print(f"  {pair!r}")
    print(f"      pr -> {pr_pair(pair, order)!r}    "
          f"R = {pair.r_statistic(order).latex()}")

print("\nround trip through the constructive lift:")
for p in paths:
    pair = lift_path(rs, p, order)
    assert pr_pair(pair, order) == p
    print(f"  {p!r}  lifts to  {pair!r}")
