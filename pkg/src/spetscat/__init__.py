"""Exact character-level invariants of the spetsial imprimitive complex
reflection groups G(m,1,n) and G(m,m,n): fake degrees, generic degrees,
Schur elements, Fourier pairings, and rational Catalan trace identities,
all in exact cyclotomic arithmetic with zero numerical tolerance.
"""

from .exactnum import (
    Cyclotomic,
    LaurentPoly,
    InexactDivisionError,
    FractionalPowerError,
    cyclo,
    cyclo_rational,
    eval_at_root,
    poly_exact_div,
    q_int,
    q_monomial,
    q_poly,
)
from .groups import (
    GroupSpec,
    GroupInvariants,
    Reflection,
    Gm1n,
    Gmmn,
    TypeA,
    invariants,
    enumerate_reflections,
    parse_group,
)
from .labels import (
    CharLabel,
    all_labels,
    dimension,
    dual_label,
    exterior_twist_label,
    galois_twist,
    label_str,
    parse_label,
)
from .symbols import (
    MSymbol,
    Family,
    symbol_of,
    symbol_stats,
    symbol_str,
    families,
    family_of,
    rotation_stabilizer,
)
from .tableaux import (
    GeneratorMatrices,
    build_model,
    reflection_character_sum,
    standard_tableaux,
)
from .degrees import (
    CharData,
    char_data,
    all_char_data,
    fake_degree,
    generic_degree,
    schur_element,
    poincare,
    family_invariants,
    tau,
)
from .fourier import (
    PairingMatrix,
    NonabelianFourier,
    pairing,
    pairing_matrix,
    verify_T1,
    pairing_symmetry_report,
    verify_transform_swap,
    nonabelian_fourier,
)
from .chartable import FiniteGroup, character_table
from .catalan import (
    VerificationReport,
    catalan,
    closed_form_main,
    coprime_range,
    trace_sum,
    verify_main,
    verify_parking,
    verify_vanishing,
)

__version__ = "0.1.0"
