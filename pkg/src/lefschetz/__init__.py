"""Exact computations with Lefschetz properties of graded Artinian algebras."""

from .algebra import GradedAlgebra
from .betti import (
    BettiTable,
    betti_bounds,
    eliahou_kervaire_table,
    euler_identity_holds,
    koszul_betti_table,
    lex_betti_numbers,
)
from .cilab import (
    CIDegrees,
    SplittingType,
    apolar_algebra,
    ci_fuzz,
    jumping_line_ci,
    predicted_IplusL_table,
    predicted_splitting_type,
    random_complete_intersection,
    restrict_mod_linear,
    syzygy_splitting_type,
)
from .construction import construct, plan_construction, verify_construction
from .field import QQ, Field, field
from .hilbert import is_o_sequence, macaulay_bound, wlp_admissible, wlp_profile
from .ideals import IdealSpan, MonomialIdeal, lex_segment_ideal, power_of_max_ideal
from .lefschetz import LefschetzVerdict, check_slp, check_wlp, check_with_witness
from .parser import ParseError, parse_hf, parse_ideal_text, parse_polynomial, read_ideal_file
from .polynomial import Polynomial
from .ring import Ring

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "CIDegrees", "Field", "GradedAlgebra", "IdealSpan", "LefschetzVerdict", "MonomialIdeal",
    "ParseError", "Polynomial", "QQ", "Ring", "SplittingType", "apolar_algebra", "betti_bounds", "check_slp",
    "check_wlp", "check_with_witness", "ci_fuzz", "construct", "eliahou_kervaire_table", "euler_identity_holds",
    "field", "is_o_sequence", "jumping_line_ci", "koszul_betti_table", "lex_betti_numbers", "lex_segment_ideal",
    "macaulay_bound", "parse_hf", "parse_ideal_text", "parse_polynomial", "plan_construction",
    "power_of_max_ideal", "predicted_IplusL_table", "predicted_splitting_type", "random_complete_intersection",
    "read_ideal_file", "restrict_mod_linear", "syzygy_splitting_type", "verify_construction", "wlp_admissible",
    "wlp_profile",
]
