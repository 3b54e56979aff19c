#!/usr/bin/env python3
"""Walkthrough: turning a tree optimum into a Halin optimum by block swaps.

On a recursively balanced substrate the Halin optimum is reached by taking
any optimal tree layout and swapping equal-size sibling subtree blocks
(which never changes the tree cost) until the leaves read in cyclic order.
The swap trace is recorded and can be replayed step by step.
"""

from halin_ola import (
    cycle_cost_is_tight,
    direct_rbt_halin_ola,
    gen_kary_rbt_halin,
    la_cost,
    rbt_ola,
    rearrange_to_halin_ola,
    replay_trace,
    scramble_tree_ola,
)

h = gen_kary_rbt_halin(3, 2, 3)  # ternary root, binary below, n=22
print(f"instance: n={h.n}, leaves={len(h.cycle_order)}")

tree_layout = rbt_ola(h.tree)
print("optimal tree layout cost:", la_cost(h.tree, tree_layout).total_cost)
print("that layout on the Halin graph:",
      la_cost(h, tree_layout).total_cost, "(cycle part not tight yet)")

# shuffle the tree optimum into a different, equally optimal layout so the
# rearrangement below has real work to do
start = scramble_tree_ola(h.tree, tree_layout, seed=11)
assert la_cost(h.tree, start).total_cost == la_cost(h.tree, tree_layout).total_cost

final, trace = rearrange_to_halin_ola(h, start)
report = la_cost(h, final)
print(f"\nafter rearrangement: total={report.total_cost} "
      f"tree={report.tree_cost} cycle={report.cycle_cost}")
print("cycle part tight (= 2(n-1)):", cycle_cost_is_tight(h, final))

print(f"\ntrace: {trace.total_swaps} swaps, "
      f"{trace.total_moved_vertices} vertex moves")
for step in trace.steps[:6]:
    kind = "cross-side (both blocks reversed)" if step.reversed_pair else "same-side"
    print(f"  height {step.level_height}: swap blocks rooted at "
          f"{step.block_a} and {step.block_b} [{kind}]")
if trace.total_swaps > 6:
    print(f"  ... {trace.total_swaps - 6} more")

assert replay_trace(h.tree, start, trace) == final
print("\nreplaying the trace reproduces the final layout: ok")

direct = direct_rbt_halin_ola(h)
print("independent direct construction cost:", la_cost(h, direct).total_cost)
