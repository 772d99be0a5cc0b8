"""
Orthogonal projection of a point onto a surface through the matrix
representation of its normal congruence.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from constants import DEFAULT_SEED
from model.fiberlab import TargetPoint, evaluate_float, fiber_degree, fiber_points_from_kernel
from model.matrixrep import build_rep
from model.polyring import MultiDegree

from .congruence import NormalCongruence
from .surface import foot_predicate

LOGGER = logging.getLogger(__name__)


class DegenerateQueryError(ValueError):
    """The linear fiber over the query is not finite (e.g. the center of a sphere)."""


@dataclass(frozen=True)
class FootPoint:
    parameter: tuple
    foot: tuple
    exact: bool = True

    def to_json(self, field) -> dict:
        if self.exact:
            fmt = field.format_element
            return {"parameter": [fmt(c) for c in self.parameter], "foot": [fmt(c) for c in self.foot],
                    "exact": True}
        return {"parameter": [f"{c:.12g}" for c in self.parameter],
                "foot": [f"{c:.12g}" for c in self.foot], "exact": False}


@dataclass(frozen=True)
class ProjectionReport:
    query: TargetPoint
    nu: MultiDegree
    degree: int
    certified: bool
    feet: tuple[FootPoint, ...]
    approximate: bool = False
    diagnostics: tuple[str, ...] = ()

    def to_json(self) -> dict:
        field = self.query.field
        return {
            "query": self.query.texts(),
            "nu": self.nu.to_json(),
            "degree": self.degree,
            "certified": self.certified,
            "approximate": self.approximate,
            "feet": [f.to_json(field) for f in self.feet],
            "diagnostics": list(self.diagnostics),
        }


def default_degree(cong: NormalCongruence) -> MultiDegree:
    """Lower corner of the first E-set, with zero components raised to 1."""
    corner = cong.certificate().region.lower_corner
    return MultiDegree(tuple(max(c, 1) for c in corner))


def _foot(surface, x: Sequence, exact: bool) -> tuple:
    if exact:
        s = [f.evaluate(list(x)) for f in surface.maps]
    else:
        s = [evaluate_float(f, list(x)) for f in surface.maps]
    return tuple(s[i] / s[0] for i in range(1, 4))


def project_point(cong: NormalCongruence, query: Sequence, nu=None,
                  seed: int = DEFAULT_SEED) -> ProjectionReport:
    """
    Pies de las perpendiculares desde query (homogéneo, p_0 != 0) a la superficie.
    The fiber degree is the corank of M_nu(p); corank growth at nu + e_1 marks
    an infinite linear fiber.
    """
    field = cong.param.ring.field
    p = query if isinstance(query, TargetPoint) else TargetPoint.of(field, query)
    if len(p) != 4:
        raise ValueError("A query point has four homogeneous coordinates")
    if not p.coords[0]:
        raise ValueError("Query point lies at infinity")
    certificate = cong.certificate()
    nu = default_degree(cong) if nu is None else cong.param.ring.coerce_degree(nu)
    M = build_rep(cong.param, nu, certificate=certificate)
    report = fiber_degree(M, p)
    bumped = nu + MultiDegree.unit(len(nu), 0)
    wider = fiber_degree(build_rep(cong.param, bumped, certificate=certificate), p)
    if wider.corank > report.corank:
        raise DegenerateQueryError(f"Corank grows from {report.corank} at {nu} to {wider.corank} "
                                   f"at {bumped}; the fiber over {p} is not finite")
    diagnostics = list(report.diagnostics)
    feet: list[FootPoint] = []
    approximate = False
    if report.corank:
        kernel = fiber_points_from_kernel(M, p, seed=seed)
        diagnostics.extend(d for d in kernel.diagnostics if d not in diagnostics)
        approximate = kernel.approximate
        nx = cong.surface.ring.nblocks
        for point in kernel:
            x = tuple(c for block in point.blocks[:nx] for c in block)
            if foot_predicate(cong.surface, p.coords, x):
                feet.append(FootPoint(x, _foot(cong.surface, x, point.exact), point.exact))
            else:
                LOGGER.warning("Candidate %s rejected by the foot predicate", x)
                diagnostics.append(f"candidate {x} rejected by the foot predicate")
    LOGGER.info("Projection of %s: degree %d, %d foot point(s)", p, report.corank, len(feet))
    return ProjectionReport(p, nu, report.corank, report.certified, tuple(feet), approximate,
                            tuple(diagnostics))
