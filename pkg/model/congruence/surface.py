"""
Parameterized surfaces X -> P^3 (X = P^2 or P^1 x P^1): normal vectors and
the orthogonal-foot predicate.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from constants import NUMERIC_TOLERANCE
from model.exactlinalg import maximal_minors
from model.fiberlab import evaluate_float
from model.polyring import (GradedRingSpec, MultiDegree, Parameterization, Polynomial, gcd_all,
                            parse_parameterization)

LOGGER = logging.getLogger(__name__)


class DegenerateSurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class NormalVector:
    components: tuple[Polynomial, Polynomial, Polynomial]
    degree: MultiDegree


@dataclass(frozen=True)
class SurfaceParam:
    param: Parameterization

    def __post_init__(self):
        if self.param.r != 4:
            raise ValueError("A surface in P^3 needs four forms")
        if self.param.ring.block_sizes not in ((3,), (2, 2)):
            raise ValueError("The source must be P^2 or P^1 x P^1")

    @classmethod
    def of(cls, ring: GradedRingSpec, texts: Sequence[str]) -> "SurfaceParam":
        return cls(parse_parameterization(texts, ring))

    @property
    def X(self) -> str:
        return "P2" if self.param.ring.block_sizes == (3,) else "P1xP1"

    @property
    def ring(self) -> GradedRingSpec:
        return self.param.ring

    @property
    def maps(self) -> tuple[Polynomial, ...]:
        return self.param.maps

    @property
    def degree(self) -> MultiDegree:
        return self.param.degree

    def tangent_variables(self) -> tuple[str, str]:
        """Variables whose partials span the tangent plane together with s itself."""
        blocks = self.ring.blocks
        if self.X == "P2":
            return blocks[0][1], blocks[0][2]
        return blocks[0][1], blocks[1][1]

    @cached_property
    def normal(self) -> NormalVector:
        return normal_vector(self)


def normal_vector(surface: SurfaceParam) -> NormalVector:
    """
    Normal euclídea libre de contenido: (pi_1, pi_2, pi_3) / gcd, donde
    pi_k = (-1)^k por el menor de [s; d_a s; d_b s] sin la columna k.
    """
    a, b = surface.tangent_variables()
    s = list(surface.maps)
    rows = [s, [f.diff(a) for f in s], [f.diff(b) for f in s]]
    found = maximal_minors(rows)
    # subsets (0,1,2), (0,1,3), (0,2,3), (1,2,3): column k is omitted at index 3 - k
    pi = [found[3 - k] if k % 2 == 0 else -found[3 - k] for k in range(4)]
    normal = pi[1:]
    nonzero = [n for n in normal if not n.is_zero]
    if not nonzero:
        raise DegenerateSurfaceError("The normal vector vanishes identically; the surface is degenerate")
    content = gcd_all(nonzero)
    components = tuple(n.exquo(content) for n in normal)
    degree = next(n.multidegree for n in components if not n.is_zero)
    LOGGER.debug("Normal vector of degree %s", degree)
    return NormalVector(components, degree)


def _is_numeric(values: Sequence) -> bool:
    return any(isinstance(v, (float, complex)) for v in values)


def foot_predicate(surface: SurfaceParam, query: Sequence, x: Sequence,
                   tol: float = NUMERIC_TOLERANCE) -> bool:
    """
    q = sigma(x) lies on the surface (s_0(x) != 0) and query - q is parallel to
    the normal at x. query is homogeneous (p_0 : p_1 : p_2 : p_3) with p_0 != 0.
    Exact over the field unless x carries floating coordinates.
    """
    field = surface.ring.field
    normal = surface.normal.components
    if _is_numeric(x):
        s = [evaluate_float(f, x) for f in surface.maps]
        n = [evaluate_float(c, x) for c in normal]
        p = [field.to_float(field.coerce(c)) if not isinstance(c, (float, complex)) else c
             for c in query]
        if abs(s[0]) <= tol or abs(p[0]) <= tol or max(abs(c) for c in n) <= tol:
            return False
        diff = [p[i] / p[0] - s[i] / s[0] for i in range(1, 4)]
        cross = _cross(diff, n)
        scale = max(1.0, max(abs(c) for c in diff)) * max(abs(c) for c in n)
        return max(abs(c) for c in cross) <= tol * scale
    values = [field.coerce(c) for c in x]
    p = [field.coerce(c) for c in query]
    s = [f.evaluate(values) for f in surface.maps]
    n = [c.evaluate(values) for c in normal]
    if not s[0] or not p[0] or not any(n):
        return False
    diff = [p[i] / p[0] - s[i] / s[0] for i in range(1, 4)]
    return not any(_cross(diff, n))


def _cross(u: Sequence, v: Sequence) -> list:
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]
