from fractions import Fraction
from itertools import product
from math import comb, gcd

import pytest

from spetscat.exactnum import cyclo_rational
from spetscat.groups import Gm1n, Gmmn, invariants
from spetscat.labels import CharLabel, all_labels, label_str
from spetscat.symbols import (
    families,
    label_of_symbol,
    symbol_of,
    symbol_rank,
    symbols_with_entries,
)
from spetscat.degrees import all_char_data
from spetscat.fourier import (
    _pairing_all_second_reps,
    nonabelian_fourier,
    pairing,
    pairing_matrix,
    pairing_symmetry_report,
    verify_T1,
    verify_transform_swap,
)
from spetscat.chartable import cyclic_group_table, symmetric_group_table

TRIO = [Gm1n(2, 2), Gm1n(3, 2), Gm1n(2, 3)]


def test_pairing_of_trivial_is_one():
    for g in TRIO:
        triv = CharLabel(g, ((g.n,),) + ((),) * (g.m - 1))
        assert pairing(g, triv, triv) == 1


def test_pairing_middle_family_of_b2():
    g = Gm1n(2, 2)
    refl = CharLabel(g, ((1,), (1,)))
    row_a = CharLabel(g, ((1, 1), ()))
    col_c = CharLabel(g, ((), (2,)))
    half = Fraction(1, 2)
    assert pairing(g, refl, refl) == half
    assert pairing(g, row_a, refl) == half
    assert pairing(g, row_a, col_c) == -half


def test_pairing_vanishes_across_families():
    g = Gm1n(2, 2)
    triv = CharLabel(g, ((2,), ()))
    refl = CharLabel(g, ((1,), (1,)))
    assert pairing(g, triv, refl).is_zero()


def test_pairing_requires_gm1n():
    g = Gmmn(3, 3)
    lab = all_labels(g)[0]
    with pytest.raises(ValueError):
        pairing(g, lab, lab)


def test_T1_exact():
    for g in TRIO:
        rep = verify_T1(g)
        assert rep.equal, rep.failures[:3]


def test_T2_symmetry_and_T3_support():
    for g in TRIO:
        rep = pairing_symmetry_report(g)
        assert rep.equal, rep.failures[:3]


def test_pairing_matrix_rows_unit_norm():
    g = Gm1n(2, 2)
    for fam in families(g):
        mat = pairing_matrix(g, fam)
        for i, row in enumerate(mat.entries):
            assert mat.entries[i][i] == mat.entries[i][i].conjugate()


def test_second_representative_independence():
    for g in (Gm1n(2, 2), Gm1n(3, 2)):
        for fam in families(g):
            for a in fam.members:
                for b in fam.members:
                    vals = _pairing_all_second_reps(g, a, b)
                    assert all(v == vals[0] for v in vals)


def _admissible_classes_brute_force(m, entries):
    """Every admissible assignment, grouped into symbols, by raw
    enumeration of all functions from positions to rows."""
    size = len(entries)
    ell = (size - 1) // m
    target = (ell * comb(m, 2)) % m
    symbols = {}
    for psi in product(range(m), repeat=size):
        if sum(psi) % m != target:
            continue
        rows = [[] for _ in range(m)]
        admissible = True
        for pos, row in enumerate(psi):
            v = entries[pos]
            if rows[row] and rows[row][-1] == v:
                admissible = False
                break
            rows[row].append(v)
        if not admissible:
            continue
        key = tuple(tuple(r) for r in rows)
        symbols[key] = symbols.get(key, 0) + 1
    return symbols


def test_assignment_classes_biject_with_family_symbols():
    """The assignment classes built from a family's entry multiset are in
    bijection with the defect-0 symbols carrying that multiset, each class
    having one assignment per way of permuting equal entries."""
    g = Gm1n(3, 2)
    for fam in families(g):
        s0 = symbol_of(fam.members[0])
        entries = s0.entries()
        classes = _admissible_classes_brute_force(g.m, entries)
        expected = {
            s.rows for s in symbols_with_entries(g.m, entries, "content1")
        }
        assert set(classes) == expected
        mult = 1
        for v in set(entries):
            cnt = sum(1 for e in entries if e == v)
            for i in range(2, cnt + 1):
                mult *= i
        assert all(size == mult for size in classes.values())
        # the family's own symbols appear among the classes
        for lab in fam.members:
            assert symbol_of(lab).rows in classes
        # and every class of full rank is a unipotent symbol of rank n
        for rows in classes:
            from spetscat.symbols import MSymbol

            assert symbol_rank(MSymbol(rows)) == g.n


def test_swap_identity():
    for g in TRIO:
        h = invariants(g).coxeter_number
        for p in [p for p in range(1, 2 * h) if gcd(p, h) == 1]:
            rep = verify_transform_swap(g, p)
            assert rep.equal, (str(g), p, rep.witness)


def _check_unitary(nf):
    n = len(nf.pairs)
    for i in range(n):
        for j in range(n):
            total = cyclo_rational(0)
            for k in range(n):
                total = total + nf.matrix[i][k] * nf.matrix[j][k].conjugate()
            assert total == (1 if i == j else 0)


def test_nonabelian_fourier_z2():
    nf = nonabelian_fourier(cyclic_group_table(2))
    assert len(nf.pairs) == 4
    half = Fraction(1, 2)
    for row in nf.matrix:
        for v in row:
            assert v == half or v == -half
    _check_unitary(nf)


def test_nonabelian_fourier_z3_and_s3():
    nf3 = nonabelian_fourier(cyclic_group_table(3))
    assert len(nf3.pairs) == 9
    _check_unitary(nf3)
    nfs3 = nonabelian_fourier(symmetric_group_table(3))
    assert len(nfs3.pairs) == 8
    _check_unitary(nfs3)


def test_nonabelian_fourier_trivial_group():
    nf = nonabelian_fourier(((0,),))
    assert len(nf.pairs) == 1
    assert nf.matrix[0][0] == 1


def test_nonabelian_fourier_bound():
    with pytest.raises(ValueError):
        nonabelian_fourier(symmetric_group_table(4), bound=10)
