"""
Assembly of the elimination matrix M_nu of a parameterization.

Rows: the monomials of R_nu. Columns of T-degree 1: every minimal syzygy
generator of degree nu' <= nu times every monomial of degree nu - nu'.
Columns of T-degree l >= 2: the Rees equations of rees_layer(nu, l).
Entry (m, column) is the coefficient of m in the column form, a polynomial in T.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from model.exactlinalg import DenseMatrix
from model.polyring import (Monomial, MultiDegree, Parameterization, Polynomial, add_monomials,
                            graded_basis)
from model.syzygy import ReesInfeasibleError, minimal_generators_up_to, rees_layer

from .thresholds import ThresholdCertificate, certify

LOGGER = logging.getLogger(__name__)


class UncertifiedDegreeError(ValueError):
    def __init__(self, nu: MultiDegree, certificate: ThresholdCertificate):
        super().__init__(f"Degree {nu} is outside the certified region {certificate.region} "
                         f"({certificate.setting.value}); use force to build it anyway")
        self.nu = nu
        self.certificate = certificate


@dataclass(frozen=True)
class ColumnTag:
    t_degree: int
    source: str
    generator: int
    generator_degree: MultiDegree
    shift: Optional[Monomial] = None

    def provenance(self, param: Parameterization) -> str:
        if self.source == "syzygy":
            return (f"syzygy generator {self.generator} of degree {self.generator_degree} "
                    f"times {param.ring.monomial_text(self.shift)}")
        return f"Rees layer {self.t_degree} equation {self.generator}"


@dataclass(frozen=True)
class MatrixRep:
    param: Parameterization
    nu: MultiDegree
    rows: tuple[Monomial, ...]
    columns: tuple[ColumnTag, ...]
    entries: tuple[tuple[Polynomial, ...], ...]
    certificate: ThresholdCertificate
    valid: bool
    lmax: int = 1
    diagnostics: tuple[str, ...] = ()

    @property
    def setting(self):
        return self.certificate.setting

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return tuple(row[j] for row in self.entries)

    def as_rows(self) -> list[list[Polynomial]]:
        return [list(row) for row in self.entries]

    def linear_block(self) -> list[list[Polynomial]]:
        cols = [j for j, tag in enumerate(self.columns) if tag.t_degree == 1]
        return [[row[j] for j in cols] for row in self.entries]


def specialize(M: MatrixRep, point: Sequence) -> DenseMatrix:
    """M_nu(p): every entry evaluated at the target point p."""
    field = M.param.ring.field
    rows, cols = M.shape
    values = [field.coerce(v) for v in point]
    if len(values) != M.param.r:
        raise ValueError(f"Point has {len(values)} coordinates, expected {M.param.r}")
    data = [[e.evaluate(values) if not e.is_zero else field.zero for e in row] for row in M.entries]
    return DenseMatrix.from_rows(field, data, cols)


def _lmax_cap(param: Parameterization, lmax_cap: Optional[int]) -> int:
    return param.ring.nvars if lmax_cap is None else lmax_cap


def build_rep(param: Parameterization, nu, lmax: int = 1,
              certificate: Optional[ThresholdCertificate] = None, force: bool = False,
              lmax_cap: Optional[int] = None, reg: Optional[int] = None,
              indeg: Optional[int] = None) -> MatrixRep:
    """
    Construye M_nu con columnas de T-grado 1..lmax.

    :param force: permite grados fuera de la región certificada (valid=False)
        y omite capas de Rees no resolubles con un diagnóstico.
    """
    ring = param.ring
    nu = ring.coerce_degree(nu)
    if not nu.is_nonnegative():
        raise ValueError(f"Degree {nu} has a negative component")
    if lmax < 1:
        raise ValueError("lmax must be at least 1")
    if certificate is None:
        certificate = certify(param, reg=reg, indeg=indeg)
    valid = certificate.contains(nu)
    diagnostics = []
    if not valid:
        if not force:
            raise UncertifiedDegreeError(nu, certificate)
        LOGGER.warning("Building M_%s outside the certified region %s", nu, certificate.region)
        diagnostics.append(f"degree {nu} outside certified region {certificate.region}")
    cap = _lmax_cap(param, lmax_cap)
    if lmax > cap:
        LOGGER.warning("lmax %d clamped to %d", lmax, cap)
        diagnostics.append(f"lmax {lmax} clamped to {cap}")
        lmax = cap

    target = param.target_ring
    T = target.poly_ring.gens
    zero = target.poly_ring.zero
    rows = graded_basis(ring, nu)
    index = {m: k for k, m in enumerate(rows)}
    columns: list[ColumnTag] = []
    data: list[list] = []

    for g_idx, g in enumerate(minimal_generators_up_to(param, nu)):
        for shift in graded_basis(ring, nu - g.degree):
            col = [zero] * len(rows)
            for i, comp in enumerate(g.components):
                for exp, c in comp.element.items():
                    k = index[add_monomials(shift, exp)]
                    col[k] = col[k] + T[i] * c
            columns.append(ColumnTag(1, "syzygy", g_idx, g.degree, shift))
            data.append(col)

    nx = ring.nvars
    for ell in range(2, lmax + 1):
        try:
            layer = rees_layer(param, nu, ell)
        except ReesInfeasibleError as e:
            if not force:
                raise
            LOGGER.warning("Rees layer %d omitted: %s", ell, e)
            diagnostics.append(f"Rees layer {ell} omitted: {e}")
            continue
        for e_idx, eq in enumerate(layer.equations):
            col = [zero] * len(rows)
            for exp, c in eq.element.items():
                k = index[exp[:nx]]
                col[k] = col[k] + target.poly_ring({exp[nx:]: c})
            columns.append(ColumnTag(ell, "layer", e_idx, nu))
            data.append(col)

    entries = tuple(tuple(Polynomial(target, data[j][i]) for j in range(len(columns)))
                    for i in range(len(rows)))
    LOGGER.info("Built M_%s: %d x %d (%s, valid=%s)", nu, len(rows), len(columns),
                certificate.setting.value, valid)
    return MatrixRep(param, nu, rows, tuple(columns), entries, certificate, valid, lmax,
                     tuple(diagnostics))
