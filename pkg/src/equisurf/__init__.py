"""equisurf: exact RO(C3)-graded Bredon cohomology of closed C3-surfaces.

Everything is computed over the constant Z/3 Mackey coefficient system with
exact F3 arithmetic; the verify suites replay the classification's long
exact sequences and Ext computations cell by cell.
"""

__version__ = "0.1.0"

from .bigraded import DEFAULT_WINDOW, Bidegree, DimFunction, Window, parse_window
from .cohomology import (
    NotRealizable,
    answer_obj,
    cohomology,
    cohomology_from_invariants,
    to_canonical_json,
)
from .ext import ext1, ext1_detail
from .les import CofiberCase, find_case, load_cases, resolve_extension, verify_case
from .mackey import MackeyFunctorC3
from .render import render_ascii, render_svg
from .stdmod import ModuleExpr, ShiftedStd, StdKind, dim_at, dims_window
from .surfaces import (
    Family,
    Invariants,
    ParseError,
    SemanticError,
    SurfaceClass,
    classify_str,
    invariants,
    parse_surface,
    quotient_surface,
    surface_name,
    underlying_surface,
)
from .verify import run_suite

__all__ = [
    "__version__",
    "DEFAULT_WINDOW",
    "Bidegree",
    "DimFunction",
    "Window",
    "parse_window",
    "NotRealizable",
    "answer_obj",
    "cohomology",
    "cohomology_from_invariants",
    "to_canonical_json",
    "ext1",
    "ext1_detail",
    "CofiberCase",
    "find_case",
    "load_cases",
    "resolve_extension",
    "verify_case",
    "MackeyFunctorC3",
    "render_ascii",
    "render_svg",
    "ModuleExpr",
    "ShiftedStd",
    "StdKind",
    "dim_at",
    "dims_window",
    "Family",
    "Invariants",
    "ParseError",
    "SemanticError",
    "SurfaceClass",
    "classify_str",
    "invariants",
    "parse_surface",
    "quotient_surface",
    "surface_name",
    "underlying_surface",
    "run_suite",
]
