"""Exact finite-field arithmetic and rational-point enumeration for the
degree-(q-1) Fermat curve and surface, backed by the C++ core."""

from ._core import (
    Field,
    Tower,
    build_field,
    build_tower,
    check_cube_corollary,
    check_factorization_cubic,
    check_factorization_surface,
    check_square_corollary,
    check_symmetric_identity,
    cube_survey_quartic,
    curve_brute_representatives,
    curve_count_formula,
    enumerate_curve,
    enumerate_surface,
    full_report,
    gcd_overlap,
    is_prime,
    negation_set,
    prime_powers_upto,
    remark_counterexample,
    surface_brute_representatives,
    surface_count_formula,
    __version__,
)

__all__ = [
    "Field",
    "Tower",
    "build_field",
    "build_tower",
    "check_cube_corollary",
    "check_factorization_cubic",
    "check_factorization_surface",
    "check_square_corollary",
    "check_symmetric_identity",
    "cube_survey_quartic",
    "curve_brute_representatives",
    "curve_count_formula",
    "enumerate_curve",
    "enumerate_surface",
    "full_report",
    "gcd_overlap",
    "is_prime",
    "negation_set",
    "prime_powers_upto",
    "remark_counterexample",
    "surface_brute_representatives",
    "surface_count_formula",
    "__version__",
]
