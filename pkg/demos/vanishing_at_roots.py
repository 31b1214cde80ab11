#!/usr/bin/env python3
"""Evaluate every generic degree of G(3,3,3) at a primitive h-th root
of unity: the value is (-1)^k on the n+1 exterior-twist characters and
exactly zero everywhere else.
"""
from spetscat import (
    Gmmn,
    all_char_data,
    eval_at_root,
    exterior_twist_label,
    invariants,
    label_str,
)

g = Gmmn(3, 3)
h = invariants(g).coxeter_number
p = 5
assert h == 6

twists = {exterior_twist_label(g, k, p): k for k in range(g.n + 1)}
print(f"{g}, h = {h}, evaluating at the primitive root zeta_{h}^{p}\n")

for lab, cd in all_char_data(g).items():
    value = eval_at_root(cd.deg, h, p)
    tag = f"exterior power k={twists[lab]}" if lab in twists else ""
    print(f"  {label_str(lab):20s} -> {str(value):4s} {tag}")
    if lab in twists:
        assert value == (-1) ** twists[lab]
    else:
        assert value.is_zero()

print("\nNonzero values sit exactly on the twisted exterior powers.")
