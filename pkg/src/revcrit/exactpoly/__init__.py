"""Exact arithmetic kernel: rationals, univariate and sparse multivariate polynomials."""

from fractions import Fraction as Rat

from revcrit.exactpoly.gcd import gcd_degree, poly_gcd, squarefree_part
from revcrit.exactpoly.mpoly import MPoly
from revcrit.exactpoly.poly import X, DomainError, Poly
from revcrit.exactpoly.resultant import bareiss_det, resultant, sylvester_matrix
from revcrit.exactpoly.roots import NumericError, numeric_roots, rational_roots

__all__ = [
    "Rat",
    "Poly",
    "MPoly",
    "X",
    "DomainError",
    "NumericError",
    "poly_gcd",
    "gcd_degree",
    "squarefree_part",
    "resultant",
    "sylvester_matrix",
    "bareiss_det",
    "rational_roots",
    "numeric_roots",
]
