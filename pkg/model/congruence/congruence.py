"""
The congruence of normal lines of a surface, as a map X x P^1 -> P^3.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from constants import BASE_LOCUS_WINDOW, LINE_VARIABLES, NEGATIVE_SECTION_JUSTIFICATION
from model.fiberlab import BaseLocusClass, BaseLocusKind, dim_base_locus
from model.matrixrep import ThresholdCertificate, threshold_multigraded
from model.polyring import MultiDegree, Parameterization, Polynomial, lift

from .surface import SurfaceParam

LOGGER = logging.getLogger(__name__)

HYPOTHESIS_FINITE = "a"
HYPOTHESIS_NO_NEGATIVE_SECTION = "b"


@dataclass(frozen=True)
class NormalCongruence:
    surface: SurfaceParam
    param: Parameterization
    x_degree: MultiDegree
    e: int
    base_locus: Optional[BaseLocusClass]
    hypothesis: str
    justification: Optional[str] = None

    @property
    def degree_for_region(self):
        return self.x_degree[0] if self.surface.X == "P2" else tuple(self.x_degree)

    def assumptions(self) -> tuple[str, ...]:
        if self.hypothesis == HYPOTHESIS_FINITE:
            return ("base locus is finite",)
        return ("the base curve has no section in degree < (0,e)",
                "I is locally generated by at most 3 elements",
                f"justification: {self.justification}")

    def certificate(self) -> ThresholdCertificate:
        return threshold_multigraded(self.surface.X, self.degree_for_region, self.e,
                                     self.assumptions())

    def to_json(self) -> dict:
        return {
            "X": self.surface.X,
            "maps": self.param.texts(),
            "x_degree": self.x_degree.to_json(),
            "e": self.e,
            "base_locus": None if self.base_locus is None else self.base_locus.to_json(),
            "hypothesis": self.hypothesis,
            "justification": self.justification,
        }


def _multiplier(surface: SurfaceParam, target: MultiDegree, ring) -> Polynomial:
    """s_0^j times powers of the first variable of each block, of multidegree target."""
    d = surface.degree
    s0 = surface.maps[0]
    ratios = [target[b] // d[b] for b in range(len(d)) if d[b] > 0]
    j = min(ratios) if ratios and not s0.is_zero else 0
    rest = target - d * j
    result = lift(s0, ring) ** j
    for b, block in enumerate(surface.ring.blocks):
        if rest[b]:
            result = result * Polynomial.variable(ring, block[0]) ** rest[b]
    return result


def build_normal_congruence(surface: SurfaceParam, hypothesis: Optional[str] = None,
                            justification: str = NEGATIVE_SECTION_JUSTIFICATION,
                            classify_base_locus: bool = True,
                            window: int = BASE_LOCUS_WINDOW) -> NormalCongruence:
    """
    Psi_0 = tb*s_0*A, Psi_i = tb*s_i*A + t*n_i*B (i = 1..3), con n la normal y
    A, B multiplicadores que igualan multigrados; luego se quita el factor común.
    """
    ring = surface.ring
    clash = set(LINE_VARIABLES) & set(ring.variables)
    if clash:
        raise ValueError(f"Source variables {sorted(clash)} clash with the line variables")
    cring = ring.extend(LINE_VARIABLES)
    normal = surface.normal
    d, delta = surface.degree, normal.degree
    A = _multiplier(surface, (delta - d).clamp(), cring)
    B = _multiplier(surface, (d - delta).clamp(), cring)
    tb = Polynomial.variable(cring, LINE_VARIABLES[0])
    t = Polynomial.variable(cring, LINE_VARIABLES[1])
    s = [lift(f, cring) for f in surface.maps]
    n = [lift(c, cring) for c in normal.components]
    maps = [tb * s[0] * A] + [tb * s[i] * A + t * n[i - 1] * B for i in range(1, 4)]
    param = Parameterization.build(cring, maps)
    degree = param.degree
    x_degree = MultiDegree(degree.components[:-1])
    e = degree[-1]
    base_locus = dim_base_locus(param, window) if classify_base_locus else None
    if hypothesis is None:
        finite = base_locus is not None and base_locus.kind in (BaseLocusKind.EMPTY, BaseLocusKind.DIM0)
        hypothesis = HYPOTHESIS_FINITE if finite else HYPOTHESIS_NO_NEGATIVE_SECTION
    if hypothesis not in (HYPOTHESIS_FINITE, HYPOTHESIS_NO_NEGATIVE_SECTION):
        raise ValueError(f"Unknown hypothesis {hypothesis!r}")
    LOGGER.info("Normal congruence of degree (%s, %d), hypothesis (%s)", x_degree, e, hypothesis)
    return NormalCongruence(surface, param, x_degree, e, base_locus, hypothesis,
                            justification if hypothesis == HYPOTHESIS_NO_NEGATIVE_SECTION else None)
