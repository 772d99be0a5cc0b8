"""
Fiber degrees from the corank of a specialized matrix representation,
and the Fitting filtration they index.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from constants import NUMERIC_TOLERANCE
from model.exactlinalg import corank, minors
from model.matrixrep import MatrixRep, Setting, specialize
from model.polyring import FieldSpec, Polynomial

LOGGER = logging.getLogger(__name__)


class ZeroPointError(ValueError):
    def __init__(self):
        super().__init__("All coordinates of the target point are zero")


class Interpretation(str, Enum):
    FIBER_DEGREE = "FiberDegree"
    OFF_IMAGE = "OffImage"
    UNCERTIFIED = "Uncertified"


@dataclass(frozen=True)
class TargetPoint:
    """Punto de P^{r-1}; se guarda normalizado (primera coordenada no nula = 1)."""
    field: FieldSpec
    coords: tuple

    @classmethod
    def of(cls, field: FieldSpec, coords: Sequence) -> "TargetPoint":
        values = tuple(field.coerce(c) for c in coords)
        if not any(values):
            raise ZeroPointError()
        lead = next(v for v in values if v)
        return cls(field, tuple(v / lead for v in values))

    def __len__(self) -> int:
        return len(self.coords)

    def texts(self) -> list[str]:
        return [self.field.format_element(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ":".join(self.texts()) + ")"


@dataclass(frozen=True)
class FiberReport:
    point: object
    nu: object
    corank: int
    certified: bool
    interpretation: Interpretation
    approximate: bool = False
    diagnostics: tuple[str, ...] = ()

    @property
    def degree(self) -> Optional[int]:
        return self.corank if self.interpretation == Interpretation.FIBER_DEGREE else None

    def to_json(self) -> dict:
        point = self.point.texts() if isinstance(self.point, TargetPoint) else list(self.point)
        return {
            "point": point,
            "nu": self.nu.to_json(),
            "corank": self.corank,
            "certified": self.certified,
            "interpretation": self.interpretation.value,
            "degree": self.degree,
            "approximate": self.approximate,
            "diagnostics": list(self.diagnostics),
        }


def _interpret(corank_value: int, certified: bool) -> Interpretation:
    if corank_value == 0:
        return Interpretation.OFF_IMAGE
    return Interpretation.FIBER_DEGREE if certified else Interpretation.UNCERTIFIED


def _notes(M: MatrixRep) -> tuple[str, ...]:
    notes = list(M.diagnostics)
    if M.setting == Setting.SURFACE:
        notes.append("degree of the linear fiber where I is not locally a complete intersection")
    return tuple(notes)


def fiber_degree(M: MatrixRep, point) -> FiberReport:
    """corank de M_nu(p), exacto; la interpretación depende del certificado de M."""
    field = M.param.ring.field
    p = point if isinstance(point, TargetPoint) else TargetPoint.of(field, point)
    if len(p) != M.param.r:
        raise ValueError(f"Point has {len(p)} coordinates, expected {M.param.r}")
    k = corank(specialize(M, p.coords))
    report = FiberReport(p, M.nu, k, M.valid, _interpret(k, M.valid), False, _notes(M))
    LOGGER.info("Fiber at %s: corank %d (%s)", p, k, report.interpretation.value)
    return report


def evaluate_float(poly: Polynomial, values: Sequence[float]) -> float:
    to_float = poly.ring.field.to_float
    total = 0.0
    for monom, coeff in poly.element.items():
        term = to_float(coeff)
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        total += term
    return total


def fiber_degree_numeric(M: MatrixRep, coords: Sequence[float],
                         tol: float = NUMERIC_TOLERANCE) -> FiberReport:
    """
    Corank aproximado: singular values below tol * s_max count as zero.
    """
    values = [float(c) for c in coords]
    if len(values) != M.param.r:
        raise ValueError(f"Point has {len(values)} coordinates, expected {M.param.r}")
    if not any(values):
        raise ZeroPointError()
    rows, cols = M.shape
    if cols == 0:
        k = rows
    else:
        A = np.array([[evaluate_float(e, values) for e in row] for row in M.entries], dtype=float)
        s = np.linalg.svd(A, compute_uv=False)
        scale = s[0] if s.size and s[0] > 0 else 1.0
        k = rows - int(np.sum(s > tol * scale))
    LOGGER.warning("Numeric corank %d at %s (tolerance %g)", k, values, tol)
    return FiberReport(tuple(values), M.nu, k, M.valid, _interpret(k, M.valid), True,
                       _notes(M) + (f"approximate: singular values below {tol:g} * s_max treated as zero",))


def fitting_stratum(M: MatrixRep, point) -> int:
    """
    Largest i with p in V(Fitt^i), i.e. corank - 1; -1 off the image.
    """
    report = fiber_degree(M, point)
    if not report.certified:
        LOGGER.warning("Fitting stratum read from an uncertified M_%s", M.nu)
    return report.corank - 1


def fitting_ideal_generators(M: MatrixRep, i: int) -> list[Polynomial]:
    """Generadores de Fitt^i: los menores (filas - i) x (filas - i) de M, no nulos."""
    rows, cols = M.shape
    size = rows - i
    target = M.param.target_ring
    if i < 0:
        raise ValueError("Fitting index must be nonnegative")
    if size <= 0:
        return [Polynomial.one(target)]
    if size > cols:
        return []
    out = []
    for minor in minors(M.as_rows(), size):
        if not minor.is_zero and minor not in out:
            out.append(minor)
    return out
