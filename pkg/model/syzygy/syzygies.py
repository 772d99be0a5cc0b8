"""
Graded syzygies of a parameterization, computed as kernels of the
multiplication map (a_1..a_r) -> sum a_i f_i from R_nu^r to R_{nu+d}.

Vectors of R_nu^r are laid out component-major: entry i*|R_nu| + k is the
coefficient of the k-th monomial of R_nu in a_i.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from model.exactlinalg import DenseMatrix, nullspace_basis, pivot_columns
from model.polyring import (InconsistencyError, Monomial, MultiDegree, Parameterization,
                            Polynomial, add_monomials, degrees_up_to, graded_basis)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplicationMap:
    degree: MultiDegree
    matrix: DenseMatrix
    source: tuple[Monomial, ...]
    target: tuple[Monomial, ...]


@dataclass(frozen=True)
class SyzygyPiece:
    param: Parameterization
    degree: MultiDegree
    basis: tuple[tuple[Polynomial, ...], ...]
    vectors: tuple[tuple, ...]

    def __len__(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class SyzygyGenerator:
    degree: MultiDegree
    components: tuple[Polynomial, ...]
    vector: tuple


def coefficient_vector(poly: Polynomial, basis: Sequence[Monomial]) -> list:
    zero = poly.ring.field.zero
    return [poly.element.get(m, zero) for m in basis]


def stacked_vector(components: Sequence[Polynomial], basis: Sequence[Monomial]) -> list:
    out = []
    for comp in components:
        out.extend(coefficient_vector(comp, basis))
    return out


def unstack(param: Parameterization, vector: Sequence, basis: Sequence[Monomial],
            parts: int = None) -> tuple[Polynomial, ...]:
    ring = param.ring
    parts = param.r if parts is None else parts
    n = len(basis)
    return tuple(Polynomial.from_terms(ring, {basis[k]: vector[i * n + k]
                                              for k in range(n) if vector[i * n + k]})
                 for i in range(parts))


@lru_cache(maxsize=128)
def multiplication_map(param: Parameterization, nu: MultiDegree) -> MultiplicationMap:
    ring = param.ring
    source = graded_basis(ring, nu)
    target = graded_basis(ring, nu + param.degree)
    index = {m: i for i, m in enumerate(target)}
    zero = ring.field.zero
    columns = []
    for f in param.maps:
        terms = list(f.element.items())
        for m in source:
            col = [zero] * len(target)
            for exp, c in terms:
                col[index[add_monomials(m, exp)]] += c
            columns.append(col)
    matrix = DenseMatrix.from_columns(ring.field, columns, len(target)) if columns \
        else DenseMatrix.zeros(ring.field, len(target), 0)
    LOGGER.debug("multiplication map in degree %s: %dx%d", nu, matrix.rows, matrix.cols)
    return MultiplicationMap(nu, matrix, source, target)


def syzygies_in_degree(param: Parameterization, nu) -> SyzygyPiece:
    """
    Base de las sicigias de grado nu (núcleo de la multiplicación por f).
    """
    nu = param.ring.coerce_degree(nu)
    if not nu.is_nonnegative():
        return SyzygyPiece(param, nu, (), ())
    mult = multiplication_map(param, nu)
    vectors = tuple(nullspace_basis(mult.matrix))
    basis = tuple(unstack(param, v, mult.source) for v in vectors)
    for syz in basis:
        total = Polynomial.zero(param.ring)
        for a, f in zip(syz, param.maps):
            total = total + a * f
        if not total.is_zero:
            raise InconsistencyError(f"Kernel vector in degree {nu} is not a syzygy")
    return SyzygyPiece(param, nu, basis, vectors)


def shifted_vector(generator: SyzygyGenerator, shift: Monomial, basis_index: dict,
                   length: int, zero) -> list:
    """Vector of x^shift * generator in the layout of a higher degree."""
    v = [zero] * length
    n = len(basis_index)
    for i, comp in enumerate(generator.components):
        for exp, c in comp.element.items():
            v[i * n + basis_index[add_monomials(shift, exp)]] = c
    return v


@lru_cache(maxsize=64)
def _minimal_generators(param: Parameterization, nu_max: MultiDegree) -> tuple[SyzygyGenerator, ...]:
    ring = param.ring
    zero = ring.field.zero
    generators: list[SyzygyGenerator] = []
    for nu in degrees_up_to(nu_max):
        piece = syzygies_in_degree(param, nu)
        if not piece.vectors:
            continue
        basis = graded_basis(ring, nu)
        index = {m: i for i, m in enumerate(basis)}
        length = param.r * len(basis)
        lower = []
        for g in generators:
            if g.degree <= nu and g.degree != nu:
                for shift in graded_basis(ring, nu - g.degree):
                    lower.append(shifted_vector(g, shift, index, length, zero))
        columns = lower + [list(v) for v in piece.vectors]
        matrix = DenseMatrix.from_columns(ring.field, columns, length)
        fresh = [p - len(lower) for p in pivot_columns(matrix) if p >= len(lower)]
        for k in fresh:
            generators.append(SyzygyGenerator(nu, piece.basis[k], piece.vectors[k]))
        LOGGER.debug("degree %s: %d syzygies, %d new generators", nu, len(piece), len(fresh))
    return tuple(generators)


def minimal_generators_up_to(param: Parameterization, nu_max) -> tuple[SyzygyGenerator, ...]:
    """
    Generators of Syz(f) in every degree nu' <= nu_max, each one new modulo
    the variable-multiples of generators found in lower degrees.
    """
    nu_max = param.ring.coerce_degree(nu_max)
    if not nu_max.is_nonnegative():
        return ()
    return _minimal_generators(param, nu_max)


def initial_syzygy_degree(param: Parameterization) -> int:
    """Smallest degree with a nonzero syzygy (single-block sources)."""
    ring = param.ring
    if ring.nblocks != 1:
        raise ValueError("initial_syzygy_degree needs a single-block source")
    # Koszul syzygies exist in degree d
    for k in range(param.degree.total + 1):
        if syzygies_in_degree(param, MultiDegree.of(k)).vectors:
            return k
    raise InconsistencyError("No syzygy up to the Koszul degree")
