#!/usr/bin/env python3
"""The Fourier pairing of G(2,1,2): block matrices over the families,
and the exchange property sending the vector of fake degrees to the
vector of generic degrees inside each family.
"""
from spetscat import (
    Gm1n,
    all_char_data,
    families,
    label_str,
    pairing_matrix,
    verify_T1,
)
from spetscat.exactnum import LaurentPoly

g = Gm1n(2, 2)
data = all_char_data(g)

for fam in families(g):
    mat = pairing_matrix(g, fam)
    print("family {" + ", ".join(label_str(l) for l in fam.members) + "}")
    for lab, row in zip(fam.members, mat.entries):
        print(f"  {label_str(lab):12s} [" + ", ".join(str(c) for c in row) + "]")
    for i, chi in enumerate(fam.members):
        image = LaurentPoly({})
        for j, phi in enumerate(fam.members):
            image = image + data[phi].feg * mat.entries[i][j]
        print(f"  {label_str(chi):12s} transform of fake degrees = {image}")
        assert image == data[chi].deg
    print()

report = verify_T1(g)
print(f"exchange property across all characters: {'exact' if report.equal else 'FAILED'}")
