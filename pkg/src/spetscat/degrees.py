"""Fake degrees, generic degrees, Schur elements, and the derived scalar
invariants for every character of G(m,1,n) and G(m,m,n).

All four quantities are driven by the character's m-symbol:

* fake degree: symbol product formula (rows weighted by q-powers over a
  product of q-factorials), with the rotation-averaged variant for
  G(m,m,n);
* generic degree: the signed symbol-binomial product over a scaled
  q-factorial denominator, with the m/s prefactor and
  representative-independent sign for G(m,m,n);
* Schur element: two independent closed forms for G(m,1,n) (a hook
  product form and a symbol-free multiplicative form), which must agree;
  for G(m,m,n) the Schur element is the exact quotient of the Poincare
  polynomial by the generic degree, which exists precisely because these
  groups are spetsial.

Derived scalars per character: a and A (valuation and degree of the
generic degree), b and B (of the dual character's fake degree), the
generalized Coxeter number h = a + A, and the content c = |R| - h.  The
assembly cross-validates h three independent ways and refuses to return
inconsistent data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .exactnum import (
    Cyclotomic,
    LaurentPoly,
    cyclo,
    cyclo_rational,
    poly_exact_div,
    q_monomial,
    q_poly,
)
from .groups import KIND_G1, KIND_GM, GroupSpec, invariants
from .labels import (
    CharLabel,
    all_labels,
    canonical_rotation,
    conjugate_partition,
    dimension,
    dual_label,
)
from .symbols import (
    Family,
    MSymbol,
    families,
    raw_defect,
    rotation_stabilizer,
    symbol_of,
)

__all__ = [
    "CharData",
    "tau",
    "fake_degree",
    "generic_degree",
    "schur_element",
    "char_data",
    "all_char_data",
    "poincare",
    "family_invariants",
]


def poincare(g: GroupSpec) -> LaurentPoly:
    return invariants(g).poincare


@lru_cache(maxsize=None)
def tau(m: int) -> Cyclotomic:
    """prod_{0 <= i < j < m} (zeta_m^i - zeta_m^j), exactly in Q(zeta_m)."""
    out = cyclo_rational(1)
    for i in range(m):
        for j in range(i + 1, m):
            out = out * (cyclo(m, i) - cyclo(m, j))
    return out


def _theta(row, m: int) -> LaurentPoly:
    """prod over entries e >= 1 of prod_{j=1}^{e} (q^{mj} - 1)."""
    out = q_poly([(0, 1)])
    for e in row:
        for j in range(1, e + 1):
            out = out * (q_monomial(m * j) - 1)
    return out


def _delta(row, m: int) -> LaurentPoly:
    """prod over pairs mu < lam within a row of (q^{m lam} - q^{m mu})."""
    out = q_poly([(0, 1)])
    for b, lam in enumerate(row):
        for mu in row[:b]:
            out = out * (q_monomial(m * lam) - q_monomial(m * mu))
    return out


def _binomial_product(rows, m: int) -> LaurentPoly:
    """prod over row pairs i <= j and entries (lam, mu) in row_i x row_j
    (with mu < lam when i = j) of (q^lam zeta^i - q^mu zeta^j)."""
    out = q_poly([(0, 1)])
    for i in range(m):
        zi = cyclo(m, i)
        for j in range(i, m):
            zj = cyclo(m, j)
            for lam in rows[i]:
                for mu in rows[j]:
                    if i == j and not mu < lam:
                        continue
                    out = out * (
                        LaurentPoly({lam: zi}) - LaurentPoly({mu: zj})
                    )
    return out


def _stair_exponent(m: int, ell: int, offset: int) -> int:
    """sum_{j=1}^{ell-1} C(m*j + offset, 2)."""
    return sum(comb(m * j + offset, 2) for j in range(1, ell))


def fake_degree(lab: CharLabel) -> LaurentPoly:
    """Graded multiplicity of the character in the coinvariant algebra,
    as a polynomial in q; its value at q = 1 is the dimension."""
    g = lab.group
    s = symbol_of(lab)
    m, n = g.m, g.n
    rows = s.rows
    if g.kind == KIND_G1:
        ell = (s.content - 1) // m
        numer = q_poly([(0, 1)])
        for i in range(1, n + 1):
            numer = numer * (q_monomial(m * i) - 1)
        for row in rows:
            numer = numer * _delta(row, m)
        weight = sum((m - i) * sum(rows[i]) for i in range(1, m))
        numer = numer.shift(weight - _stair_exponent(m, ell, 1))
        den = q_poly([(0, 1)])
        for row in rows:
            den = den * _theta(row, m)
        return poly_exact_div(numer, den)
    if g.kind == KIND_GM:
        ell = s.content // m
        srot = rotation_stabilizer(s)
        numer = q_monomial(n) - 1
        for i in range(1, n):
            numer = numer * (q_monomial(m * i) - 1)
        for row in rows:
            numer = numer * _delta(row, m)
        rot_sum = q_poly(
            [
                (sum((m - i) * sum(rows[(i + j) % m]) for i in range(1, m)), 1)
                for j in range(m)
            ]
        )
        numer = numer * rot_sum
        numer = numer.shift(-_stair_exponent(m, ell, 0))
        den = q_poly([(0, 1)])
        for row in rows:
            den = den * _theta(row, m)
        return poly_exact_div(numer, den) * Fraction(1, srot)
    raise ValueError("type A mode has no fake-degree pipeline")


def _generic_degree_of_symbol(g: GroupSpec, s: MSymbol) -> LaurentPoly:
    m, n = g.m, g.n
    rows = s.rows
    if g.kind == KIND_G1:
        ell = (s.content - 1) // m
        sign = (-1) ** (comb(m, 2) * comb(ell, 2))
        numer = q_poly([(0, sign)])
        for i in range(1, n + 1):
            numer = numer * (q_monomial(m * i) - 1)
        numer = numer * _binomial_product(rows, m)
        numer = numer.shift(-_stair_exponent(m, ell, 1))
        den = q_poly([(0, 1)])
        for row in rows:
            den = den * _theta(row, m)
        return poly_exact_div(numer, den) * tau(m).inv() ** ell
    if g.kind == KIND_GM:
        ell = s.content // m
        srot = rotation_stabilizer(s)
        defect_steps = raw_defect(s)
        assert defect_steps % m == 0, "unipotent symbols have defect 0 mod m"
        gamma = (defect_steps // m) * (m * ell - 1)
        sign = (-1) ** (comb(m, 2) * comb(ell, 2) + gamma)
        numer = q_poly([(0, sign)]) * (q_monomial(n) - 1)
        for i in range(1, n):
            numer = numer * (q_monomial(m * i) - 1)
        numer = numer * _binomial_product(rows, m)
        numer = numer.shift(-_stair_exponent(m, ell, 0))
        den = q_poly([(0, 1)])
        for row in rows:
            den = den * _theta(row, m)
        return (
            poly_exact_div(numer, den)
            * tau(m).inv() ** ell
            * Fraction(m, srot)
        )
    raise ValueError("type A mode has no generic-degree pipeline")


def generic_degree(lab: CharLabel) -> LaurentPoly:
    """The q-polynomial playing the role of a principal-series character
    degree; it is the Poincare polynomial divided by the Schur element,
    and a genuine polynomial because the supported groups are spetsial."""
    return _generic_degree_of_symbol(lab.group, symbol_of(lab))


# ---------------------------------------------------------------------------
# Schur elements for G(m,1,n): two independent closed forms


def _young_cells(lam):
    return [(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)]


def _hook(lam_s, lam_t_conj, i, j):
    """lam_s[i] - i + lam_t'[j] - j + 1 with 1-based i, j."""
    arm = lam_s[i - 1] if i <= len(lam_s) else 0
    leg = lam_t_conj[j - 1] if j <= len(lam_t_conj) else 0
    return arm - i + leg - j + 1


def _n_stat(lam) -> int:
    return sum((i - 1) * part for i, part in enumerate(lam, 1))


def schur_element(lab: CharLabel, formula: str = "chlouveraki") -> LaurentPoly:
    """Schur element of a G(m,1,n) character at the spetsial
    specialization, by either of two published closed forms.

    formula = "chlouveraki": a single product of shifted hook binomials
    divided by (q-1)^n.  formula = "mathas": hook q-integers with the
    cross-component correction factors.  The two must agree exactly.
    """
    g = lab.group
    if g.kind != KIND_G1:
        raise ValueError(
            "closed Schur forms cover G(m,1,n); use char_data for G(m,m,n)"
        )
    if formula == "chlouveraki":
        return _schur_chlouveraki(lab)
    if formula == "mathas":
        return _schur_mathas(lab)
    raise ValueError(f"unknown formula {formula!r}")


def _schur_chlouveraki(lab: CharLabel) -> LaurentPoly:
    m, n = lab.group.m, lab.group.n
    parts = lab.parts
    conjs = [conjugate_partition(p) for p in parts]
    flat = sorted((x for p in parts for x in p), reverse=True)
    sign = (-1) ** (n * (m - 1))
    out = q_poly([(0, sign)]).shift(-_n_stat(flat))
    for s in range(m):
        for (i, j) in _young_cells(parts[s]):
            for t in range(m):
                h = _hook(parts[s], conjs[t], i, j)
                e = h + (1 if s == 0 else 0) - (1 if t == 0 else 0)
                z = cyclo(m, s - t)
                out = out * (LaurentPoly({e: z}) - 1)
    return poly_exact_div(out, (q_monomial(1) - 1) ** n)


def _schur_mathas(lab: CharLabel) -> LaurentPoly:
    m, n = lab.group.m, lab.group.n
    parts = lab.parts
    conjs = [conjugate_partition(p) for p in parts]

    def q_cap(s):
        # Q_s as a Laurent polynomial: q for s = 0, else the scalar zeta^s
        return q_monomial(1) if s == 0 else q_poly([(0, cyclo(m, s))])

    alpha = sum(_n_stat(p) for p in parts)
    sign = (-1) ** (m * n)
    numer = q_poly([(0, sign)]).shift(-alpha - n)
    den = q_poly([(0, 1)])
    for s in range(m):
        qs = q_cap(s)
        for (i, j) in _young_cells(parts[s]):
            h = _hook(parts[s], conjs[s], i, j)
            numer = numer * qs * q_poly([(e, 1) for e in range(h)])
        for t in range(s + 1, m):
            qt = q_cap(t)
            lam_t = parts[t]
            lam_t_conj = conjs[t]
            first_col = lam_t[0] if lam_t else 0
            for (i, j) in _young_cells(lam_t):
                numer = numer * (q_monomial(j - i) * qt - qs)
            for (i, j) in _young_cells(parts[s]):
                e = j - i
                numer = numer * (q_monomial(e) * qs - q_monomial(first_col) * qt)
                for k in range(1, first_col + 1):
                    col = lam_t_conj[k - 1] if k <= len(lam_t_conj) else 0
                    numer = numer * (
                        q_monomial(e) * qs - q_monomial(k - 1 - col) * qt
                    )
                    den = den * (
                        q_monomial(e) * qs - q_monomial(k - col) * qt
                    )
    return poly_exact_div(numer, den)


# ---------------------------------------------------------------------------
# assembled per-character data


@dataclass(frozen=True)
class CharData:
    label: CharLabel
    feg: LaurentPoly
    deg: LaurentPoly
    schur: LaurentPoly
    a: int
    A: int
    b: int
    B: int
    h_char: int
    content_c: int

    def to_json(self):
        from .labels import label_str

        return {
            "label": label_str(self.label),
            "feg": self.feg.to_json(),
            "deg": self.deg.to_json(),
            "schur": self.schur.to_json(),
            "a": self.a,
            "A": self.A,
            "b": self.b,
            "B": self.B,
            "h": self.h_char,
            "c": self.content_c,
        }


def _exterior_twist_power(lab: CharLabel) -> int | None:
    """k when the label has the exterior-twist shape (n-k) + column 1^k in
    a component coprime to m, else None."""
    g = lab.group
    m, n = g.m, g.n
    parts = lab.parts
    for k in range(n + 1):
        for slot in range(m):
            if k and m > 1 and gcd(slot, m) != 1:
                continue
            comps = [()] * m
            if k == 0:
                comps[0] = (n,)
            elif slot == 0:
                comps[0] = tuple([n - k] + [1] * k) if n > k else (1,) * k
            else:
                if n > k:
                    comps[0] = (n - k,)
                comps[slot] = (1,) * k
            cand = tuple(comps)
            if g.kind == KIND_GM:
                cand = canonical_rotation(cand)
            if cand == parts:
                return k
    return None


def char_data(lab: CharLabel) -> CharData:
    return all_char_data(lab.group)[lab]


@lru_cache(maxsize=None)
def all_char_data(g: GroupSpec) -> dict[CharLabel, CharData]:
    """CharData for every label of the group, cross-validated.

    The generalized Coxeter number is required to agree between (i) the
    valuation-plus-degree of the generic degree, (ii) the exponent-sum
    route through the fake degrees of the character and its dual, and
    (iii) k times the Coxeter number on exterior-twist labels; any
    mismatch raises.
    """
    inv = invariants(g)
    p_w = inv.poincare
    labs = all_labels(g)
    fegs = {lab: fake_degree(lab) for lab in labs}
    out: dict[CharLabel, CharData] = {}
    for lab in labs:
        deg = generic_degree(lab)
        if g.kind == KIND_G1:
            schur = schur_element(lab, "chlouveraki")
        else:
            schur = poly_exact_div(p_w, deg)
        feg = fegs[lab]
        dim = dimension(lab)
        if feg.value_at_one() != dim or deg.value_at_one() != dim:
            raise AssertionError(f"degree values at q=1 disagree with dim({lab})")
        a, A = deg.min_exp(), deg.max_exp()
        dual_feg = fegs[dual_label(lab)]
        b, B = dual_feg.min_exp(), dual_feg.max_exp()
        h_char = a + A
        n_sum = feg.derivative_at_one().as_fraction()
        n_sum_dual = dual_feg.derivative_at_one().as_fraction()
        if Fraction(h_char) != (n_sum + n_sum_dual) / dim:
            raise AssertionError(
                f"exponent-sum route disagrees with a + A for {lab}"
            )
        k = _exterior_twist_power(lab)
        if k is not None and h_char != k * inv.coxeter_number:
            raise AssertionError(
                f"exterior-twist label {lab} has h = {h_char}, "
                f"expected {k} * {inv.coxeter_number}"
            )
        out[lab] = CharData(
            label=lab,
            feg=feg,
            deg=deg,
            schur=schur,
            a=a,
            A=A,
            b=b,
            B=B,
            h_char=h_char,
            content_c=inv.num_reflections - h_char,
        )
    return out


def family_invariants(g: GroupSpec) -> tuple[tuple[Family, int, int], ...]:
    """Families with their shared (a, A); raises if not constant."""
    data = all_char_data(g)
    out = []
    for fam in families(g):
        a_vals = {data[lab].a for lab in fam.members}
        A_vals = {data[lab].A for lab in fam.members}
        if len(a_vals) != 1 or len(A_vals) != 1:
            raise AssertionError(
                f"family {[str(l) for l in fam.members]} has non-constant (a, A)"
            )
        out.append((fam, a_vals.pop(), A_vals.pop()))
    return tuple(out)
