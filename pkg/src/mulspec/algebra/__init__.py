"""Exact arithmetic: domains, polynomials, resultants, finite-field factoring."""

from .domains import (GF, QQ, ZZ, CyclotomicField, DomainError, ExtField,
                      PrimeField, cyclotomic_poly, is_prime)
from .factor import (factor, factor_list, is_irreducible, minimal_polynomial,
                     random_irreducible, roots_in_field, squarefree_decomposition)
from .kernels import BACKEND
from .linalg import Inconsistent, RankDeficient, bareiss_det, solve
from .mpoly import MPolyRing, MultiPoly
from .upoly import (PolyRing, UniPoly, gcd, gcdex, interpolate, resultant,
                    resultant_bareiss, resultant_binary_forms, resultant_euclid,
                    squarefree_part, sylvester_matrix)

__all__ = [
    "GF", "QQ", "ZZ", "BACKEND", "CyclotomicField", "DomainError", "ExtField",
    "Inconsistent", "MPolyRing", "MultiPoly", "PolyRing", "PrimeField",
    "RankDeficient", "UniPoly", "bareiss_det", "cyclotomic_poly", "factor",
    "factor_list", "gcd", "gcdex", "interpolate", "is_irreducible", "is_prime",
    "minimal_polynomial", "random_irreducible", "resultant", "resultant_bareiss",
    "resultant_binary_forms", "resultant_euclid", "roots_in_field", "solve",
    "squarefree_decomposition", "squarefree_part", "sylvester_matrix",
]
