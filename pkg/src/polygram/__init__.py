"""Exact grammar-derivative calculus.

Sparse multivariate polynomials over big integers drive a rewrite-rule
derivation operator; on top of that sit the gamma vectors of the type A/B
Coxeter complexes and associahedra, Eulerian numbers of both types,
derivative polynomials of tangent and secant, Legendre/Chebyshev relatives,
and brute-force enumeration oracles that certify every closed form.
"""

from .gamma import (FAMILIES, GammaVector, HPoly, associahedron_h, coxeter_h,
                    gamma_to_h, h_to_gamma)
from .grammar import (DerivOp, Grammar, PatternMismatch, PowerPattern,
                      expansion_coefficients, iterate_operator,
                      operator_iterates, verify_identity)
from .parser import ParseError, parse_grammar, parse_poly
from .poly import AlphabetMismatch, MixedParityError, MultiPoly
from .report import Check, Report
from .unipoly import UniPoly
from .verify import TARGETS, run_all, run_target

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "Check",
    "DerivOp",
    "FAMILIES",
    "GammaVector",
    "Grammar",
    "HPoly",
    "MixedParityError",
    "MultiPoly",
    "ParseError",
    "PatternMismatch",
    "PowerPattern",
    "Report",
    "TARGETS",
    "UniPoly",
    "associahedron_h",
    "coxeter_h",
    "expansion_coefficients",
    "gamma_to_h",
    "h_to_gamma",
    "iterate_operator",
    "operator_iterates",
    "parse_grammar",
    "parse_poly",
    "run_all",
    "run_target",
    "verify_identity",
    "__version__",
]
