"""Polyring package: fields, multigraded rings, polynomials and their text grammar"""

from .errors import (FieldCoefficientError, InconsistencyError, InexactDivisionError,
                     NotHomogeneousError, PolynomialSyntaxError, UnknownVariableError)
from .field import RATIONALS, FieldSpec
from .parser_poly import parse_polynomial
from .polynomial import (CommonFactorError, Parameterization, Polynomial, gcd, gcd_all,
                         lift, target_names, to_text)
from .ring import (GradedRingSpec, Monomial, MultiDegree, add_monomials, degrees_up_to,
                   graded_basis, graded_dimension)


def parse_parameterization(texts, ring: GradedRingSpec) -> Parameterization:
    """Parse the map texts and build the parameterization (common factor removed)."""
    return Parameterization.build(ring, [parse_polynomial(t, ring) for t in texts])


__all__ = [
    "FieldSpec", "RATIONALS", "GradedRingSpec", "MultiDegree", "Monomial",
    "Polynomial", "Parameterization", "parse_polynomial", "parse_parameterization",
    "graded_basis", "graded_dimension", "degrees_up_to", "add_monomials",
    "gcd", "gcd_all", "lift", "to_text", "target_names",
    "PolynomialSyntaxError", "UnknownVariableError", "FieldCoefficientError",
    "NotHomogeneousError", "InexactDivisionError", "InconsistencyError", "CommonFactorError",
]
