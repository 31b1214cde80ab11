#!/usr/bin/env python3
"""The non-abelian Fourier transform of a small finite group, computed
from its multiplication table: pairs (class representative, irreducible
character of its centralizer) index an exactly unitary matrix.
"""
from spetscat import nonabelian_fourier
from spetscat.chartable import cyclic_group_table, symmetric_group_table
from spetscat.exactnum import cyclo_rational

for name, table in (("Z/2", cyclic_group_table(2)), ("S_3", symmetric_group_table(3))):
    nf = nonabelian_fourier(table)
    size = len(nf.pairs)
    print(f"{name}: {size} pairs (x, sigma)")
    for row in nf.matrix:
        print("   [" + ", ".join(f"{str(v):>8s}" for v in row) + "]")
    for i in range(size):
        for j in range(size):
            dot = cyclo_rational(0)
            for k in range(size):
                dot = dot + nf.matrix[i][k] * nf.matrix[j][k].conjugate()
            assert dot == (1 if i == j else 0)
    print(f"   unitary: yes (M conj(M)^T = 1 exactly)\n")
