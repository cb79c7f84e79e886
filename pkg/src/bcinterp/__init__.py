"""Exact-arithmetic library for BC-type interpolation polynomials, Jack
polynomials, quadratic Capelli eigenvalues, and the operator identities
behind them.  Every computation is over the rationals; nothing rounds."""

from .capelli import (
    eigenvalue,
    eigenvalue_poly,
    first_order_top_check,
    gamma,
    rho_from_root_data,
    rho_relation_check,
    rho_vector,
    vanishing_theorem_check,
)
from .cli import main, run_suite
from .exactalg import MultiPoly, rat, rat_str
from .jack import jack, stanley_check, stanley_coefficient
from .okounkov import (
    check_vanishing,
    interpolation_combinatorial,
    interpolation_vanishing,
)
from .partitions import clean, conjugate, contains, dominates, weight
from .symfunc import (
    FieldCase,
    PropertyViolation,
    SkewShape,
    SymFunc,
    containment_necessity,
    lr_coefficient,
    rectangular_decomposition,
    restriction_multiplicity,
    rotate180,
    schur_product,
    skew_schur,
)
from .weyl import (
    OperatorCase,
    WeylElement,
    appendix_report,
    build_D1,
    verify_appendix,
)

__all__ = [
    "MultiPoly",
    "WeylElement",
    "OperatorCase",
    "FieldCase",
    "SkewShape",
    "SymFunc",
    "PropertyViolation",
    "appendix_report",
    "build_D1",
    "check_vanishing",
    "clean",
    "conjugate",
    "containment_necessity",
    "contains",
    "dominates",
    "eigenvalue",
    "eigenvalue_poly",
    "first_order_top_check",
    "gamma",
    "interpolation_combinatorial",
    "interpolation_vanishing",
    "jack",
    "lr_coefficient",
    "main",
    "rat",
    "rat_str",
    "rectangular_decomposition",
    "restriction_multiplicity",
    "rho_from_root_data",
    "rho_relation_check",
    "rho_vector",
    "rotate180",
    "run_suite",
    "schur_product",
    "skew_schur",
    "stanley_check",
    "stanley_coefficient",
    "vanishing_theorem_check",
    "verify_appendix",
    "weight",
]
