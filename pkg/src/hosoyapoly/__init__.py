"""Exact Hosoya polynomial triangles, gibonomials and gcd identity checks."""

from .errors import HosoyaError
from .gfp import BUILTIN_FAMILIES, GfpSpec, Kind, builtin_family, classify, family_names, term
from .gibonomial import gibonomial_triangle
from .hosoya import HosoyaTriangle, build
from .polyarith import IntPolynomial, X, format_poly, gcd, gcd_many, parse_poly
from .report import Status, VerificationReport
from .stardavid import Orientation, check_star, make_star, verify_star_grid

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_FAMILIES",
    "GfpSpec",
    "HosoyaError",
    "HosoyaTriangle",
    "IntPolynomial",
    "Kind",
    "Orientation",
    "Status",
    "VerificationReport",
    "X",
    "build",
    "builtin_family",
    "check_star",
    "classify",
    "family_names",
    "format_poly",
    "gcd",
    "gcd_many",
    "gibonomial_triangle",
    "make_star",
    "parse_poly",
    "term",
    "verify_star_grid",
]
