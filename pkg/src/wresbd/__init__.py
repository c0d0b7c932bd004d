"""Exact engine for boundary contributions to the noncommutative residue.

Layers, bottom to top:

* :mod:`wresbd.ring` -- exact Gaussian-rational scalars and sphere moments;
* :mod:`wresbd.clifford` -- Clifford/endomorphism words, normal form,
  symbolic traces for the spin and exterior representations;
* :mod:`wresbd.symbols` -- rational symbols in the normal covariable,
  Wiener-Hopf projections, residue line integral;
* :mod:`wresbd.catalog` -- operator-family symbol catalogs and the
  composition recursion that rederives them;
* :mod:`wresbd.boundary` -- case enumeration, exact case evaluation,
  assembly, mean-curvature substitution;
* :mod:`wresbd.oracle` -- independent seeded numeric cross-check;
* :mod:`wresbd.ledger` / :mod:`wresbd.cli` -- verification reports.
"""

from .boundary import (CASES, BoundaryCase, CaseResult, assemble,
                       enumerate_cases, evaluate_case, substitute_K)
from .catalog import (DIRAC, FAMILIES, SIGNATURE, CatalogEntry,
                      OperatorFamily, cubed_sigma, first_order_sigma,
                      invert_cubed)
from .clifford import (CliffordElement, ext_degree_trace, normal_form,
                       trace_ext, trace_spin)
from .ledger import build_ledger, render_json, render_text
from .oracle import OracleAssignment, oracle_case
from .ring import (GRat, Scalar, reduce_unit_sphere, sphere_integrate,
                   sphere_moment)
from .symbols import (NotIntegrable, RationalSymbol, integrate_line,
                      pi_minus, pi_plus)

__all__ = [
    "BoundaryCase",
    "CASES",
    "CaseResult",
    "CatalogEntry",
    "CliffordElement",
    "DIRAC",
    "FAMILIES",
    "GRat",
    "NotIntegrable",
    "OperatorFamily",
    "OracleAssignment",
    "RationalSymbol",
    "SIGNATURE",
    "Scalar",
    "assemble",
    "build_ledger",
    "cubed_sigma",
    "enumerate_cases",
    "evaluate_case",
    "ext_degree_trace",
    "first_order_sigma",
    "integrate_line",
    "invert_cubed",
    "normal_form",
    "oracle_case",
    "pi_minus",
    "pi_plus",
    "reduce_unit_sphere",
    "render_json",
    "render_text",
    "sphere_integrate",
    "sphere_moment",
    "substitute_K",
    "trace_ext",
    "trace_spin",
]
