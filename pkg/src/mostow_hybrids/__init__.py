"""Exact verification toolkit for Mostow's complex reflection lattices and their hybrids."""

__version__ = "0.1.0"

from .cyclo import CycloField, CycloNum, abs_squared, field_for_params, sign_of_real
from .hermitian import ComplexLine, HermitianForm, HVector, mostow_form, signature
from .isometry import IsoType, ProjIsometry, classify, projective_order
from .mostow import (
    MostowGroup,
    MostowParams,
    Phase,
    admissible_pairs,
    build_group,
    index3_predicate,
    mirror_check,
    polar_vectors,
    verify_relations,
)
from .restrict import (
    Gamma,
    LineChart,
    MobiusClass,
    TriangleSignature,
    classify_mobius,
    mobius_trace_invariant,
    restrict_isometry,
    triangle_signature,
    verify_trace_formulas,
)
from .arith import check_noncommensurable, commensurability_class, is_arithmetic
from .fpgroup import Presentation, quotient_presentation, todd_coxeter, verify_hybrid_words, verify_K_normal
from .hybrid import build_hybrid, core_polygon, theorem_suite

__all__ = [
    "CycloField",
    "CycloNum",
    "abs_squared",
    "field_for_params",
    "sign_of_real",
    "ComplexLine",
    "HermitianForm",
    "HVector",
    "mostow_form",
    "signature",
    "IsoType",
    "ProjIsometry",
    "classify",
    "projective_order",
    "MostowGroup",
    "MostowParams",
    "Phase",
    "admissible_pairs",
    "build_group",
    "index3_predicate",
    "mirror_check",
    "polar_vectors",
    "verify_relations",
    "Gamma",
    "LineChart",
    "MobiusClass",
    "TriangleSignature",
    "classify_mobius",
    "mobius_trace_invariant",
    "restrict_isometry",
    "triangle_signature",
    "verify_trace_formulas",
    "check_noncommensurable",
    "commensurability_class",
    "is_arithmetic",
    "Presentation",
    "quotient_presentation",
    "todd_coxeter",
    "verify_hybrid_words",
    "verify_K_normal",
    "build_hybrid",
    "core_polygon",
    "theorem_suite",
]
