"""Exact symbolic Chern-Simons transgression forms for explicit connection matrices."""

from .context import VarContext
from .errors import CSError
from .exterior import Form, d, restrict, wedge
from .homotopy import PrimitiveWitness, is_exact, poincare_kappa, primitive
from .invariants import InvPoly, chern_weil, elementary, eval_on_diagonal, newton_eval, parse_invpoly
from .logres import (CyclePoly, GammaSet, LogConnection, cs_residue_check, gamma_chern, gamma_newton,
                     integrability_deductions, log_split, residue, residue_matrix)
from .matform import FormMatrix, bracket, curvature, gauge, is_flat, mat_mul, trace
from .parse import parse_connection, parse_form
from .printing import format_form, format_matrix, print_form
from .scalar import Poly, TPoly, integrate_unit, substitute
from .transgression import (TransgressionResult, cs_class, phi_t, rigidity_identity_check, transgress,
                            transgress_newton)

__version__ = "0.1.0"

__all__ = [
    "VarContext", "CSError", "Form", "d", "restrict", "wedge",
    "PrimitiveWitness", "is_exact", "poincare_kappa", "primitive",
    "InvPoly", "chern_weil", "elementary", "eval_on_diagonal", "newton_eval", "parse_invpoly",
    "CyclePoly", "GammaSet", "LogConnection", "cs_residue_check", "gamma_chern", "gamma_newton",
    "integrability_deductions", "log_split", "residue", "residue_matrix",
    "FormMatrix", "bracket", "curvature", "gauge", "is_flat", "mat_mul", "trace",
    "parse_connection", "parse_form", "format_form", "format_matrix", "print_form",
    "Poly", "TPoly", "integrate_unit", "substitute",
    "TransgressionResult", "cs_class", "phi_t", "rigidity_identity_check", "transgress",
    "transgress_newton",
]
