"""
Upgrading Koszul cycles to Rees equations of higher T-degree, and back.

A cycle (h_1..h_r) with deg h_i = nu + (l-1)d upgrades to
E = sum_i sum_alpha c_{i,alpha} T_i T^alpha, where h_i = sum_alpha c_{i,alpha} f^alpha,
|alpha| = l-1 and c_{i,alpha} in R_nu.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Sequence

from model.exactlinalg import DenseMatrix, solve
from model.polyring import (InconsistencyError, Monomial, MultiDegree, Parameterization, Polynomial,
                            add_monomials, graded_basis)

from .koszul import koszul_H1

LOGGER = logging.getLogger(__name__)


class ReesInfeasibleError(ArithmeticError):
    """h_i is not a combination of the products f^alpha with coefficients of degree nu."""


@dataclass(frozen=True)
class ReesEquationLayer:
    param: Parameterization
    ell: int
    degree: MultiDegree
    equations: tuple[Polynomial, ...]
    cycles: tuple[tuple[Polynomial, ...], ...]

    def __len__(self) -> int:
        return len(self.equations)


def _t_exponents(param: Parameterization, k: int) -> tuple[Monomial, ...]:
    return graded_basis(param.target_ring, MultiDegree.of(k))


def _f_power(param: Parameterization, alpha: Monomial, cache: Dict[Monomial, Polynomial]) -> Polynomial:
    if alpha not in cache:
        value = Polynomial.one(param.ring)
        for f, a in zip(param.maps, alpha):
            if a:
                value = value * f ** a
        cache[alpha] = value
    return cache[alpha]


def _rees_monomial(param: Parameterization, x_exp: Monomial, t_exp: Monomial) -> Monomial:
    return tuple(x_exp) + tuple(t_exp)


def upgrade_syzygy(param: Parameterization, cycle: Sequence[Polynomial], ell: int,
                   nu=None) -> Polynomial:
    """
    Eleva la sicigia (h_1..h_r) a una ecuación de grado ell en T.
    La solución elegida es la escalonada mínima (variables libres en cero).
    """
    if ell < 1:
        raise ValueError("T-degree must be at least 1")
    if len(cycle) != param.r:
        raise ValueError(f"Cycle has {len(cycle)} components, expected {param.r}")
    rees = param.rees_ring
    if all(h.is_zero for h in cycle):
        return Polynomial.zero(rees)
    shift = param.degree * (ell - 1)
    if nu is None:
        nu = next(h.multidegree for h in cycle if not h.is_zero) - shift
    nu = param.ring.coerce_degree(nu)
    if not nu.is_nonnegative():
        raise ReesInfeasibleError(f"Cycle degree is below (l-1)*d for l={ell}")
    coeff_basis = graded_basis(param.ring, nu)
    target_basis = graded_basis(param.ring, nu + shift)
    target_index = {m: k for k, m in enumerate(target_basis)}
    alphas = _t_exponents(param, ell - 1)
    cache: Dict[Monomial, Polynomial] = {}
    field = param.ring.field
    zero = field.zero
    columns = []
    for alpha in alphas:
        fa = _f_power(param, alpha, cache)
        for m in coeff_basis:
            col = [zero] * len(target_basis)
            for exp, c in fa.element.items():
                col[target_index[add_monomials(m, exp)]] += c
            columns.append(col)
    system = DenseMatrix.from_columns(field, columns, len(target_basis))
    terms: Dict[Monomial, object] = {}
    for i, h in enumerate(cycle):
        rhs = [h.element.get(m, zero) for m in target_basis]
        if any(exp not in target_index for exp in h.element.keys()):
            raise ValueError(f"Component {i} is not of degree {nu + shift}")
        x = solve(system, rhs)
        if x is None:
            raise ReesInfeasibleError(f"Component {i} is not in the span of f^alpha * R_{nu}")
        for a_idx, alpha in enumerate(alphas):
            t_exp = list(alpha)
            t_exp[i] += 1
            for m_idx, m in enumerate(coeff_basis):
                c = x[a_idx * len(coeff_basis) + m_idx]
                if c:
                    key = _rees_monomial(param, m, t_exp)
                    terms[key] = terms.get(key, zero) + c
    return Polynomial.from_terms(rees, terms)


def downgrade(param: Parameterization, equation: Polynomial) -> tuple[Polynomial, ...]:
    """
    Inverse split of upgrade_syzygy: each T-monomial T^beta keeps its first
    variable linear and sends the rest to f^(beta - e_i).
    """
    if equation.ring != param.rees_ring:
        raise ValueError("Equation must live in the Rees ring of the parameterization")
    nx = param.ring.nvars
    cache: Dict[Monomial, Polynomial] = {}
    parts = [Polynomial.zero(param.ring) for _ in range(param.r)]
    for exp, c in equation.element.items():
        x_exp, beta = exp[:nx], exp[nx:]
        i = next((k for k, b in enumerate(beta) if b), None)
        if i is None:
            raise ValueError("Equation has a term of T-degree 0")
        alpha = list(beta)
        alpha[i] -= 1
        term = Polynomial.monomial(param.ring, x_exp, c) * _f_power(param, tuple(alpha), cache)
        parts[i] = parts[i] + term
    return tuple(parts)


def substitute_maps(param: Parameterization, equation: Polynomial) -> Polynomial:
    """E(x, f(x)) as a polynomial in the source ring."""
    if equation.ring != param.rees_ring:
        raise ValueError("Equation must live in the Rees ring of the parameterization")
    images = [Polynomial.variable(param.ring, name) for name in param.ring.variables]
    return equation.compose(images + list(param.maps))


def rees_layer(param: Parameterization, nu, ell: int) -> ReesEquationLayer:
    """
    Capa de T-grado ell: eleva una base de H_1 en grado nu + ell*d.
    """
    if ell < 2:
        raise ValueError("Rees layers start at T-degree 2")
    nu = param.ring.coerce_degree(nu)
    piece = koszul_H1(param, nu + param.degree * ell)
    cycles = piece.cycles
    equations = tuple(upgrade_syzygy(param, cycle, ell, nu) for cycle in cycles)
    for eq in equations:
        if not substitute_maps(param, eq).is_zero:
            raise InconsistencyError(f"Rees equation {eq} does not vanish under T -> f")
    LOGGER.debug("Rees layer l=%d nu=%s: %d equations", ell, nu, len(equations))
    return ReesEquationLayer(param, ell, nu, equations, cycles)
