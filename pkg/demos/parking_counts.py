#!/usr/bin/env python3
"""The parking-function count: the Wedderburn-weighted trace sum equals
(q^p - 1)^n, whose value at q = 1 specializes to p^n, the expected
number of parking objects.
"""
from spetscat import Gm1n, Gmmn, coprime_range, invariants, verify_parking

for g in (Gm1n(2, 3), Gmmn(3, 2)):
    h = invariants(g).coxeter_number
    print(f"{g}: h = {h}")
    for p in coprime_range(h, 2 * h):
        rep = verify_parking(g, p)
        assert rep.equal
        # (q^p - 1)^n at q -> 1 has leading behavior (q-1)^n p^n
        print(f"  p={p:<3d} weighted sum = {rep.lhs}   (counts p^n = {p ** g.n})")
    print()
