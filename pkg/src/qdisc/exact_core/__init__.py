"""Exact arithmetic substrate: rationals, Q[x], Q(t) and dense matrices."""

from .matrix import SymMatrix, congruence, det_bareiss, identity, matmul, transpose
from .poly import NEG_INF, Poly, discriminant, interpolate, poly_gcd, resultant, subresultant_prs
from .rational import Q, Rational, format_rational, parse_rational, qpow
from .ratfunc import RatFunc, monomial_t

__all__ = [
    "NEG_INF",
    "Poly",
    "Q",
    "RatFunc",
    "Rational",
    "SymMatrix",
    "congruence",
    "det_bareiss",
    "discriminant",
    "format_rational",
    "identity",
    "interpolate",
    "matmul",
    "monomial_t",
    "parse_rational",
    "poly_gcd",
    "qpow",
    "resultant",
    "subresultant_prs",
    "transpose",
]
