"""Exact bigraded cohomology dimension tables for invertible polynomials."""

__version__ = "0.1.0"

from .engine import (
    BigradedTable,
    Contribution,
    GammaMonomial,
    aggregate_contributions,
    compute_table,
    contributions_for,
    hh2_vanishes,
    list_contributions,
)
from .errors import (
    CoefficientError,
    DegenerateCharacter,
    EngineError,
    GoldenMismatch,
    InputError,
    MfhhError,
    NonterminatingFamily,
    NoPositiveSolution,
    NotInvertible,
    NotIsolated,
    PolySyntaxError,
    SchemaError,
    UnknownFamily,
    WindowMismatch,
)
from .invariants import (
    FAMILY_NAMES,
    ScaleVerdict,
    SmallResVerdict,
    golden_check,
    golden_family_poly,
    scale_compare,
    small_res_probe,
)
from .jacobian import MonomialBasis, RestrictedPolynomial, milnor_number, monomial_basis, restrict
from .poly import InvertiblePolynomial, WeightSystem, parse, transpose, weights
from .symmetry import GroupElement, SymmetryContext, build_context, chi_power, fixed_census, ker_chi

__all__ = [
    "BigradedTable",
    "Contribution",
    "GammaMonomial",
    "GroupElement",
    "InvertiblePolynomial",
    "MonomialBasis",
    "RestrictedPolynomial",
    "ScaleVerdict",
    "SmallResVerdict",
    "SymmetryContext",
    "WeightSystem",
    "aggregate_contributions",
    "build_context",
    "chi_power",
    "compute_table",
    "contributions_for",
    "fixed_census",
    "golden_check",
    "golden_family_poly",
    "hh2_vanishes",
    "ker_chi",
    "list_contributions",
    "milnor_number",
    "monomial_basis",
    "parse",
    "restrict",
    "scale_compare",
    "small_res_probe",
    "transpose",
    "weights",
    "FAMILY_NAMES",
]
