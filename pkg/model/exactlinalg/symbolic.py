"""Minors and determinants of matrices with Polynomial entries."""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, Sequence

from sympy.polys.matrices import DomainMatrix

from model.polyring import Polynomial

LOGGER = logging.getLogger(__name__)

PolyMatrix = Sequence[Sequence[Polynomial]]


def _shape(M: PolyMatrix) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ValueError("Ragged symbolic matrix")
    return rows, cols


class _Laplace:
    """Cofactor expansion along the first row with memoized sub-minors."""

    def __init__(self, M: PolyMatrix):
        self.M = M
        self.ring = M[0][0].ring
        self.memo: Dict[tuple, object] = {}

    def det(self, rows: tuple[int, ...], cols: tuple[int, ...]):
        key = (rows, cols)
        if key in self.memo:
            return self.memo[key]
        if not rows:
            value = self.ring.poly_ring.one
        elif len(rows) == 1:
            value = self.M[rows[0]][cols[0]].element
        else:
            value = self.ring.poly_ring.zero
            top = rows[0]
            for j, c in enumerate(cols):
                a = self.M[top][c].element
                if not a:
                    continue
                sub = self.det(rows[1:], cols[:j] + cols[j + 1:])
                value = value + a * sub if j % 2 == 0 else value - a * sub
        self.memo[key] = value
        return value


def minors(M: PolyMatrix, k: int) -> list[Polynomial]:
    """
    All k x k minors; row subsets in lexicographic order, column subsets
    lexicographic inside each row subset.
    """
    rows, cols = _shape(M)
    if not 1 <= k <= min(rows, cols):
        raise ValueError(f"Minor size {k} out of range for a {rows}x{cols} matrix")
    ring = M[0][0].ring
    laplace = _Laplace(M)
    out = []
    for R in combinations(range(rows), k):
        for C in combinations(range(cols), k):
            out.append(Polynomial(ring, laplace.det(R, C)))
    LOGGER.debug("%d minors of size %d from a %dx%d matrix", len(out), k, rows, cols)
    return out


def maximal_minors(M: PolyMatrix) -> list[Polynomial]:
    """Minors of size rows, one per column subset in lexicographic order."""
    rows, cols = _shape(M)
    if rows > cols:
        raise ValueError(f"{rows}x{cols} matrix has more rows than columns; transpose first")
    return minors(M, rows)


def symbolic_determinant(M: PolyMatrix) -> Polynomial:
    """Fraction-free determinant of a square polynomial matrix."""
    rows, cols = _shape(M)
    if rows != cols:
        raise ValueError(f"Determinant of a non-square {rows}x{cols} matrix")
    ring = M[0][0].ring
    if rows <= 4:
        return Polynomial(ring, _Laplace(M).det(tuple(range(rows)), tuple(range(cols))))
    K = ring.poly_ring.to_domain()
    dm = DomainMatrix([[e.element for e in row] for row in M], (rows, cols), K)
    return Polynomial(ring, dm.det())
