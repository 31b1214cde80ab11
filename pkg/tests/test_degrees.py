from fractions import Fraction
from math import comb, gcd

import pytest

from spetscat.exactnum import cyclo, poly_exact_div, q_monomial, q_poly
from spetscat.groups import Gm1n, Gmmn, invariants
from spetscat.labels import (
    CharLabel,
    all_labels,
    dimension,
    dual_label,
    exterior_twist_label,
)
from spetscat.degrees import (
    all_char_data,
    fake_degree,
    family_invariants,
    generic_degree,
    poincare,
    schur_element,
    tau,
)

SMALL_GROUPS = [Gm1n(2, 2), Gm1n(3, 2), Gm1n(2, 3), Gmmn(3, 2), Gmmn(2, 3), Gmmn(3, 3)]


def test_fake_degree_examples():
    g = Gm1n(2, 2)
    assert fake_degree(CharLabel(g, ((2,), ()))) == q_poly([(0, 1)])
    assert fake_degree(CharLabel(g, ((1,), (1,)))) == q_poly([(1, 1), (3, 1)])


def test_fake_degree_values_at_one():
    for g in SMALL_GROUPS:
        for lab in all_labels(g):
            assert fake_degree(lab).value_at_one() == dimension(lab)


def test_regular_representation_identity():
    for g in SMALL_GROUPS:
        total = q_poly([])
        for lab in all_labels(g):
            total = total + fake_degree(lab) * dimension(lab)
        assert total == poincare(g)


def test_generic_degree_examples():
    g = Gm1n(2, 2)
    assert generic_degree(CharLabel(g, ((2,), ()))) == q_poly([(0, 1)])
    half = Fraction(1, 2)
    assert generic_degree(CharLabel(g, ((1,), (1,)))) == q_poly(
        [(1, half), (2, 1), (3, half)]
    )
    det_like = CharLabel(g, ((), (2,)))
    assert generic_degree(det_like).value_at_one() == 1


def test_generic_degree_of_trivial_is_one_for_gmmn():
    from spetscat.labels import canonical_rotation

    for g in (Gmmn(3, 2), Gmmn(2, 3), Gmmn(3, 3), Gmmn(4, 3)):
        parts = canonical_rotation(((g.n,),) + ((),) * (g.m - 1))
        triv = CharLabel(g, parts, 0)
        assert generic_degree(triv) == q_poly([(0, 1)])


def _twist_degree_closed_form(g, k, p):
    """Independent product formula for the generic degree of the k-th
    exterior power of the p-twisted reflection representation, k >= 1."""
    m, n = g.m, g.n
    z = cyclo(m, p)
    num = q_monomial(k + m * comb(k, 2)) * (q_monomial(n - k) - z)
    for i in range(k, n + 1):
        num = num * (q_monomial(m * i) - 1)
    den = (q_monomial(k) - 1) * (q_monomial(n) - z) * m
    for j in range(1, n - k + 1):
        den = den * (q_monomial(m * j) - 1)
    return poly_exact_div(num, den)


def test_twist_generic_degrees_match_closed_form():
    for g in (Gm1n(2, 2), Gm1n(3, 2), Gm1n(2, 3), Gm1n(4, 2)):
        h = invariants(g).coxeter_number
        for p in [p for p in range(1, h + 2) if gcd(p, h) == 1]:
            for k in range(1, g.n + 1):
                lab = exterior_twist_label(g, k, p)
                assert generic_degree(lab) == _twist_degree_closed_form(g, k, p)


def test_schur_trivial_is_poincare():
    for g in (Gm1n(2, 2), Gm1n(3, 2), Gm1n(2, 3), Gm1n(4, 2)):
        triv = CharLabel(g, ((g.n,),) + ((),) * (g.m - 1))
        assert schur_element(triv, "chlouveraki") == poincare(g)
        assert schur_element(triv, "mathas") == poincare(g)


def test_schur_formulas_agree():
    for g in (Gm1n(2, 2), Gm1n(3, 2)):
        for lab in all_labels(g):
            assert schur_element(lab, "chlouveraki") == schur_element(lab, "mathas")


def test_schur_times_generic_degree_is_poincare():
    for g in SMALL_GROUPS:
        data = all_char_data(g)
        for lab, cd in data.items():
            assert cd.deg * cd.schur == poincare(g)


def test_schur_requires_gm1n_kind():
    with pytest.raises(ValueError):
        schur_element(CharLabel(Gmmn(3, 3), ((3,), (), ()), 0))


def test_char_data_scalar_conventions():
    g = Gm1n(3, 2)
    data = all_char_data(g)
    inv = invariants(g)
    for lab, cd in data.items():
        assert cd.a == cd.deg.min_exp() and cd.A == cd.deg.max_exp()
        dual_feg = fake_degree(dual_label(lab))
        assert cd.b == dual_feg.min_exp() and cd.B == dual_feg.max_exp()
        assert cd.h_char == cd.a + cd.A
        assert cd.content_c == inv.num_reflections - cd.h_char
        assert cd.a <= cd.b


def test_h_char_of_twists():
    for g in (Gm1n(2, 2), Gm1n(3, 2), Gmmn(3, 3)):
        inv = invariants(g)
        data = all_char_data(g)
        for k in range(g.n + 1):
            lab = exterior_twist_label(g, k, 1)
            assert data[lab].h_char == k * inv.coxeter_number


def test_family_shared_a_A():
    for g in SMALL_GROUPS:
        for fam, a, big_a in family_invariants(g):
            data = all_char_data(g)
            for lab in fam.members:
                assert data[lab].a == a and data[lab].A == big_a


def test_tau_squared_value():
    # tau(m)^2 = (-1)^C(m-1,2) * m^m, the radical-free characterization
    for m in (2, 3, 4):
        expected = Fraction((-1) ** comb(m - 1, 2) * m**m)
        assert (tau(m) * tau(m)).as_fraction() == expected
