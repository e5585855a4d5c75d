"""Exact counting of r x s rectangles in bargraphs of restricted words."""

from .capacity import DistPoly, oracle_distribution, oracle_total, rect_capacity
from .errors import (
    BudgetExceededError,
    NonInvertibleSeriesError,
    ParameterDomainError,
    UnsupportedRegimeError,
)
from .genfun import (
    GFRequest,
    binom,
    build_kernels,
    build_series,
    closed_total,
    gf_nondecreasing,
    gf_nondecreasing_1xs,
    gf_nondecreasing_geq,
    gf_smirnov,
    gf_smirnov_1xs,
    gf_smirnov_geq,
    gf_total,
    special_formula,
)
from .series import (
    LaurentPoly,
    XSeries,
    poly_from_json,
    poly_to_json,
    series_from_json,
    series_to_json,
)
from .words import (
    NONDECREASING,
    SMIRNOV,
    FamilySpec,
    Restriction,
    barred_first,
    cardinality,
    enumerate_words,
    first_one_at,
    is_member,
    min_letter,
    min_letter_barred_first,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DistPoly",
    "FamilySpec",
    "GFRequest",
    "LaurentPoly",
    "NONDECREASING",
    "NonInvertibleSeriesError",
    "ParameterDomainError",
    "Restriction",
    "SMIRNOV",
    "UnsupportedRegimeError",
    "XSeries",
    "barred_first",
    "binom",
    "build_kernels",
    "build_series",
    "cardinality",
    "closed_total",
    "enumerate_words",
    "first_one_at",
    "gf_nondecreasing",
    "gf_nondecreasing_1xs",
    "gf_nondecreasing_geq",
    "gf_smirnov",
    "gf_smirnov_1xs",
    "gf_smirnov_geq",
    "gf_total",
    "is_member",
    "min_letter",
    "min_letter_barred_first",
    "oracle_distribution",
    "oracle_total",
    "poly_from_json",
    "poly_to_json",
    "rect_capacity",
    "series_from_json",
    "series_to_json",
    "special_formula",
    "__version__",
]
