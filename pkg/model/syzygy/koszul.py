"""
Koszul cycles Z_p(f; R) in a prescribed degree and first homology H_1 = Z_1/B_1.

Differential: d_p(e_I) = sum_j (-1)^j f_{i_j} e_{I minus i_j}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from model.exactlinalg import DenseMatrix, nullspace_basis, pivot_columns, solve
from model.polyring import MultiDegree, Parameterization, Polynomial, add_monomials, graded_basis

from .syzygies import stacked_vector, syzygies_in_degree, unstack

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class KoszulPiece:
    param: Parameterization
    p: int
    coefficient_degree: MultiDegree
    index_sets: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[Polynomial, ...], ...]
    vectors: tuple[tuple, ...]

    @property
    def degree(self) -> MultiDegree:
        return self.coefficient_degree + self.param.degree * self.p

    def __len__(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class KoszulHomologyPiece:
    param: Parameterization
    degree: MultiDegree
    cycle_basis: tuple
    boundaries: tuple[tuple, ...]
    representatives: tuple[tuple, ...]

    @property
    def coefficient_degree(self) -> MultiDegree:
        return self.degree - self.param.degree

    @property
    def cycles(self) -> tuple[tuple[Polynomial, ...], ...]:
        return tuple(unstack(self.param, v, self.cycle_basis) for v in self.representatives)

    def __len__(self) -> int:
        return len(self.representatives)


def koszul_differential(param: Parameterization, p: int, nu: MultiDegree) -> DenseMatrix:
    """Matrix of d_p from K_p (coefficients of degree nu) to K_{p-1}."""
    ring = param.ring
    r = param.r
    sources = list(combinations(range(r), p))
    targets = {J: k for k, J in enumerate(combinations(range(r), p - 1))}
    src = graded_basis(ring, nu)
    tgt = graded_basis(ring, nu + param.degree)
    index = {m: i for i, m in enumerate(tgt)}
    zero = ring.field.zero
    length = len(targets) * len(tgt)
    columns = []
    for I in sources:
        for m in src:
            col = [zero] * length
            for j, i in enumerate(I):
                block = targets[I[:j] + I[j + 1:]] * len(tgt)
                for exp, c in param.maps[i].element.items():
                    pos = block + index[add_monomials(m, exp)]
                    col[pos] = col[pos] + c if j % 2 == 0 else col[pos] - c
            columns.append(col)
    if not columns:
        return DenseMatrix.zeros(ring.field, length, 0)
    return DenseMatrix.from_columns(ring.field, columns, length)


def koszul_cycles(param: Parameterization, p: int, nu) -> KoszulPiece:
    """
    Base de Z_p(f;R) con coeficientes de grado nu (grado total nu + p*d).
    """
    if not 1 <= p <= param.r:
        raise ValueError(f"Koszul index {p} outside 1..{param.r}")
    nu = param.ring.coerce_degree(nu)
    index_sets = tuple(combinations(range(param.r), p))
    if not nu.is_nonnegative():
        return KoszulPiece(param, p, nu, index_sets, (), ())
    matrix = koszul_differential(param, p, nu)
    vectors = tuple(nullspace_basis(matrix))
    src = graded_basis(param.ring, nu)
    basis = tuple(unstack(param, v, src, len(index_sets)) for v in vectors)
    LOGGER.debug("Z_%d in coefficient degree %s: %d cycles", p, nu, len(vectors))
    return KoszulPiece(param, p, nu, index_sets, basis, vectors)


def boundary_vectors(param: Parameterization, delta: MultiDegree) -> list[list]:
    """Images d_2(m e_i ^ e_j), in the layout of Z_1 with coefficient degree delta - d."""
    ring = param.ring
    d = param.degree
    nu2 = delta - d * 2
    if not nu2.is_nonnegative():
        return []
    basis = graded_basis(ring, delta - d)
    n = len(basis)
    index = {m: k for k, m in enumerate(basis)}
    zero = ring.field.zero
    out = []
    for i, j in combinations(range(param.r), 2):
        for m in graded_basis(ring, nu2):
            v = [zero] * (param.r * n)
            for exp, c in param.maps[i].element.items():
                v[j * n + index[add_monomials(m, exp)]] += c
            for exp, c in param.maps[j].element.items():
                v[i * n + index[add_monomials(m, exp)]] -= c
            out.append(v)
    return out


def koszul_H1(param: Parameterization, delta) -> KoszulHomologyPiece:
    """
    Representantes de H_1 = Z_1/B_1 en grado delta, elegidos como columnas
    pivote de [B | Z].
    """
    ring = param.ring
    delta = ring.coerce_degree(delta)
    nu1 = delta - param.degree
    cycle_basis = graded_basis(ring, nu1)
    if not nu1.is_nonnegative():
        return KoszulHomologyPiece(param, delta, cycle_basis, (), ())
    Z = [list(v) for v in syzygies_in_degree(param, nu1).vectors]
    B = boundary_vectors(param, delta)
    length = param.r * len(cycle_basis)
    boundaries = []
    if B:
        independent = pivot_columns(DenseMatrix.from_columns(ring.field, B, length))
        boundaries = [B[k] for k in independent]
    representatives = []
    if Z:
        columns = boundaries + Z
        pivots = pivot_columns(DenseMatrix.from_columns(ring.field, columns, length))
        representatives = [Z[k - len(boundaries)] for k in pivots if k >= len(boundaries)]
    LOGGER.debug("H_1 in degree %s: dim Z=%d dim B=%d dim H=%d", delta, len(Z), len(boundaries),
                 len(representatives))
    return KoszulHomologyPiece(param, delta, cycle_basis,
                               tuple(tuple(b) for b in boundaries),
                               tuple(tuple(z) for z in representatives))


def h1_coordinates(piece: KoszulHomologyPiece,
                   cycle: Union[Sequence[Polynomial], Sequence]) -> tuple:
    """Coordinates of a cycle on the representatives, modulo B_1."""
    if cycle and isinstance(cycle[0], Polynomial):
        vector = stacked_vector(cycle, piece.cycle_basis)
    else:
        vector = list(cycle)
    field = piece.param.ring.field
    length = piece.param.r * len(piece.cycle_basis)
    columns = [list(b) for b in piece.boundaries] + [list(z) for z in piece.representatives]
    if not columns:
        if any(vector):
            raise ValueError("Cycle is not zero in a degree where H_1 and B_1 vanish")
        return ()
    x = solve(DenseMatrix.from_columns(field, columns, length), vector)
    if x is None:
        raise ValueError("Vector is not a Koszul cycle in this degree")
    return x[len(piece.boundaries):]
