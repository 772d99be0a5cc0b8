"""
Jacobian tools for one-dimensional fibers of maps P^2 -> P^3 (and minor
ideals for general single-block sources).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Sequence

from model.exactlinalg import minors
from model.polyring import (InconsistencyError, InexactDivisionError, Parameterization, Polynomial,
                            gcd_all)
from model.syzygy import initial_syzygy_degree

from .fibers import TargetPoint

LOGGER = logging.getLogger(__name__)


class JacobianVanishesError(ValueError):
    """Every maximal minor of J(f) is zero (inseparable map or characteristic issue)."""


class NotOneDimensionalError(ValueError):
    pass


@dataclass
class JacobianSheet:
    """J(f): one row per source variable, one column per map; minors cached by size."""
    param: Parameterization
    matrix: list[list[Polynomial]]
    _cache: Dict[int, list[Polynomial]] = field(default_factory=dict, repr=False)

    def minors(self, size: int) -> list[Polynomial]:
        if size not in self._cache:
            self._cache[size] = minors(self.matrix, size)
            LOGGER.debug("Jacobian minors of size %d: %d", size, len(self._cache[size]))
        return self._cache[size]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0])


def jacobian_sheet(param: Parameterization) -> JacobianSheet:
    ring = param.ring
    matrix = [[f.diff(name) for f in param.maps] for name in ring.variables]
    return JacobianSheet(param, matrix)


class JacobianGcd(NamedTuple):
    F: Polynomial
    bound: int


def _require_plane_to_space(param: Parameterization):
    ring = param.ring
    if ring.block_sizes != (3,) or param.r != 4:
        raise ValueError("Expected a map P^2 -> P^3 (one block of 3 variables, 4 forms)")


def jacobian_minor_gcd(param: Parameterization, sheet: Optional[JacobianSheet] = None) -> JacobianGcd:
    """
    F = gcd de los cuatro menores maximales de J(f), con la cota
    3(d-1) - indeg Syz(I) para deg F.
    """
    _require_plane_to_space(param)
    sheet = sheet or jacobian_sheet(param)
    nonzero = [m for m in sheet.minors(3) if not m.is_zero]
    if not nonzero:
        raise JacobianVanishesError("All maximal minors of the Jacobian vanish; "
                                    "the map is inseparable or the characteristic divides a degree")
    F = gcd_all(nonzero)
    d = param.degree.total
    bound = 3 * (d - 1) - initial_syzygy_degree(param)
    if F.total_degree > bound:
        message = f"deg F = {F.total_degree} exceeds the bound {bound}"
        if param.ring.field.is_rational:
            raise InconsistencyError(message)
        LOGGER.warning("%s (positive characteristic)", message)
    LOGGER.info("Jacobian gcd %s, bound %d", F, bound)
    return JacobianGcd(F, bound)


@dataclass(frozen=True)
class OneDimFiberReport:
    point: TargetPoint
    ell: tuple
    h: Polynomial
    g: tuple[Polynomial, ...]

    def to_json(self) -> dict:
        fmt = self.point.field.format_element
        return {
            "point": self.point.texts(),
            "ell": [fmt(c) for c in self.ell],
            "h": self.h.to_text(),
            "g": [gi.to_text() for gi in self.g],
        }


def default_ell(p: TargetPoint) -> tuple:
    """T_j / p_j for the first nonzero coordinate p_j."""
    field = p.field
    j = next(k for k, c in enumerate(p.coords) if c)
    return tuple(field.one / c if k == j else field.zero for k, c in enumerate(p.coords))


def one_dim_fiber_decomposition(param: Parameterization, point,
                                ell: Optional[Sequence] = None) -> OneDimFiberReport:
    """
    h_p = gcd(l_1(f), ..., l_r(f)) with l_i(T) = T_i - p_i l_p(T), and g_i = l_i(f)/h_p,
    so that f_i = p_i l_p(f) + h_p g_i.
    """
    field = param.ring.field
    p = point if isinstance(point, TargetPoint) else TargetPoint.of(field, point)
    if len(p) != param.r:
        raise ValueError(f"Point has {len(p)} coordinates, expected {param.r}")
    ell = default_ell(p) if ell is None else tuple(field.coerce(c) for c in ell)
    if len(ell) != param.r:
        raise ValueError("The linear form needs one coefficient per target variable")
    if sum((a * c for a, c in zip(ell, p.coords)), field.zero) != field.one:
        raise ValueError("The linear form must take the value 1 at p")
    ell_f = Polynomial.zero(param.ring)
    for a, f in zip(ell, param.maps):
        ell_f = ell_f + f.scale(a)
    li = [f - ell_f.scale(c) for f, c in zip(param.maps, p.coords)]
    nonzero = [q for q in li if not q.is_zero]
    if not nonzero:
        raise NotOneDimensionalError("The image of the map is the point p")
    h = gcd_all(nonzero)
    if h.is_constant():
        raise NotOneDimensionalError(f"gcd of the l_i(f) is constant; the fiber over {p} "
                                     "is not one-dimensional")
    try:
        g = tuple(q.exquo(h) for q in li)
    except InexactDivisionError as e:
        raise InconsistencyError(str(e)) from None
    for f, c, gi in zip(param.maps, p.coords, g):
        if f != ell_f.scale(c) + h * gi:
            raise InconsistencyError("Reconstruction f_i = p_i l_p(f) + h_p g_i failed")
    LOGGER.info("One-dimensional fiber over %s: h_p = %s", p, h)
    return OneDimFiberReport(p, ell, h, g)


def contracted_locus_generators(param: Parameterization, drop: int,
                                sheet: Optional[JacobianSheet] = None) -> list[Polynomial]:
    """
    Nonzero minors of size m - drop + 2 of J(f) for a source P^m; a subvariety
    contracted by drop dimensions lies in their zero set.
    """
    ring = param.ring
    if ring.nblocks != 1:
        raise ValueError("contracted_locus_generators needs a single-block source")
    m = ring.nvars - 1
    size = m - drop + 2
    if not 1 <= size <= min(m + 1, param.r):
        raise ValueError(f"Minor size {size} out of range 1..{min(m + 1, param.r)}")
    sheet = sheet or jacobian_sheet(param)
    out = []
    for minor in sheet.minors(size):
        if not minor.is_zero and minor not in out:
            out.append(minor)
    return out
