"""Filters on sets with involution, formal sums with filter-controlled
support and the twisted matrix calculus of their continuous operators."""

from . import coefficients, filters, operators, sums, symsets
from .coefficients import Quaternion
from .dsl import DslSyntaxError, parse, parse_expr, unparse
from .filters import Tri, member
from .interp import Env, evaluate, run_program, show
from .operators import mat_mul, mat_vec, vec_mat
from .sums import FormalSum, char_fn, delta, fsum, pairing
from .symsets import FiniteU, IntHalfLine, IntLine, ProdSet, ProductU, SymSet

__version__ = "0.1.0"

__all__ = [
    "coefficients", "filters", "operators", "sums", "symsets",
    "Quaternion", "DslSyntaxError", "parse", "parse_expr", "unparse",
    "Tri", "member", "Env", "evaluate", "run_program", "show",
    "mat_mul", "mat_vec", "vec_mat", "FormalSum", "char_fn", "delta", "fsum", "pairing",
    "FiniteU", "IntHalfLine", "IntLine", "ProdSet", "ProductU", "SymSet",
]
