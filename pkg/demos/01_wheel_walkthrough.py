#!/usr/bin/env python3
"""Walkthrough: wheels, costs, and the Halin lower bound.

A wheel is the simplest Halin graph: a star hub whose leaves are joined by
a cycle.  This script builds a few wheels, shows how layout cost splits
into tree and cycle parts, and checks the lower bound 2(n-1) + tree
optimum against the exhaustive oracle.
"""

from halin_ola import (
    Layout,
    brute_force_ola,
    gen_wheel,
    halin_lower_bound,
    la_cost,
    rbt_ola,
)

for spokes in (3, 4, 5):
    h = gen_wheel(spokes)
    print(f"\n== wheel with {spokes} spokes (n={h.n}) ==")
    print("cycle order:", h.cycle_order)

    tree_layout = rbt_ola(h.tree)
    tree_cost = la_cost(h.tree, tree_layout).total_cost
    bound = halin_lower_bound(h, tree_cost)
    print(f"optimal tree cost {tree_cost}  =>  lower bound {bound}")

    oracle = brute_force_ola(h)
    print(f"oracle optimum {oracle.optimal_cost} "
          f"({oracle.optimal_count} optimal layouts)")
    assert oracle.optimal_cost == bound, "wheels always attain the bound"

    best = oracle.optimal_layouts[0]
    report = la_cost(h, best)
    print(f"one optimum: {best.vertex_at}  "
          f"tree={report.tree_cost} cycle={report.cycle_cost}")

# a layout that interleaves cycle neighbors pays for every extra crossing
h = gen_wheel(4)
bad = Layout((1, 3, 0, 2, 4))
report = la_cost(h, bad)
print(f"\ninterleaved W5 layout {bad.vertex_at}: "
      f"total={report.total_cost} (optimum is 14)")
