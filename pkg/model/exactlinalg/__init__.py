"""Exactlinalg package: exact dense linear algebra and symbolic minors"""

from .dense import (DenseMatrix, charpoly, corank, determinant, inverse, left_nullspace,
                    nullspace_basis, pivot_columns, rank, rref, solve)
from .symbolic import maximal_minors, minors, symbolic_determinant

__all__ = [
    "DenseMatrix", "rank", "corank", "rref", "nullspace_basis", "left_nullspace", "solve",
    "pivot_columns", "determinant", "charpoly", "inverse",
    "minors", "maximal_minors", "symbolic_determinant",
]
