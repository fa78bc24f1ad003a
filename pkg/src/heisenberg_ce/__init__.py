"""Exact Schouten calculus and homotopy transfer for the Heisenberg Lie algebra."""

from .cohomology import H0, H1, H2, H3, CohClass, NormalFormResult, class_equal, include, is_cocycle, normal_form
from .errors import (
    DegreeMismatch,
    DegreeOutOfRange,
    EngineError,
    InvalidClass,
    MixedDegree,
    NotACocycle,
    NotIntegrable,
    ParseError,
)
from .exactpoly import Poly
from .frontend import parse_class, parse_poly, parse_pv, print_class, print_poly, print_pv
from .polyvector import PolyVector, wedge
from .schouten import HEISENBERG_PI, delta_ce, schouten_closed, schouten_oracle
from .transfer import ClassWord, ResidualReport, TransferTable, d2, formality_residual, formality_step, phi2

__all__ = [
    "Poly", "PolyVector", "wedge",
    "HEISENBERG_PI", "delta_ce", "schouten_closed", "schouten_oracle",
    "H0", "H1", "H2", "H3", "CohClass", "NormalFormResult", "class_equal", "include", "is_cocycle", "normal_form",
    "ClassWord", "ResidualReport", "TransferTable", "d2", "phi2", "formality_residual", "formality_step",
    "parse_pv", "parse_poly", "parse_class", "print_pv", "print_poly", "print_class",
    "EngineError", "MixedDegree", "NotACocycle", "NotIntegrable", "InvalidClass", "DegreeMismatch",
    "DegreeOutOfRange", "ParseError",
]
