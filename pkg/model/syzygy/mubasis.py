"""
mu-bases of parameterizations with source P^1 (Hilbert-Burch columns).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from model.exactlinalg import maximal_minors
from model.polyring import CommonFactorError, MultiDegree, Parameterization, Polynomial

from .syzygies import minimal_generators_up_to

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class MuBasis:
    param: Parameterization
    columns: tuple[tuple[Polynomial, ...], ...]
    degrees: tuple[int, ...]

    @property
    def d(self) -> int:
        return self.param.degree.total

    def matrix(self) -> list[list[Polynomial]]:
        """(r-1) x r matrix whose rows are the syzygies L_1..L_{r-1}."""
        return [list(col) for col in self.columns]


def mu_basis(param: Parameterization) -> MuBasis:
    """
    Barre los grados 0..d reuniendo generadores mínimos hasta tener r-1
    con suma de grados d.
    """
    if not param.ring.is_projective_line():
        raise ValueError("mu_basis needs a P^1 source")
    d = param.degree.total
    generators = minimal_generators_up_to(param, MultiDegree.of(d))
    degrees = tuple(g.degree.total for g in generators)
    if len(generators) != param.r - 1 or sum(degrees) != d:
        raise CommonFactorError(
            f"Found {len(generators)} generators of degrees {list(degrees)}; "
            f"expected {param.r - 1} summing to {d}")
    mu = MuBasis(param, tuple(g.components for g in generators), degrees)
    hilbert_burch_check(mu)
    LOGGER.info("mu-basis degrees %s", list(degrees))
    return mu


def hilbert_burch_check(mu: MuBasis):
    """
    The maximal minor omitting column k equals (-1)^k * lam * f_k for one
    nonzero scalar lam, which is returned.
    """
    param = mu.param
    r = param.r
    found = maximal_minors(mu.matrix())
    # combinations order: the subset omitting column k sits at index r-1-k
    omitted = [found[r - 1 - k] for k in range(r)]
    lam = None
    for k, (minor, f) in enumerate(zip(omitted, param.maps)):
        signed = minor if k % 2 == 0 else -minor
        if f.is_zero:
            if not signed.is_zero:
                raise CommonFactorError("Hilbert-Burch identity fails on a zero map")
            continue
        ratio = signed.leading_coefficient() / f.leading_coefficient()
        if lam is None:
            lam = ratio
        if ratio != lam or signed != f.scale(lam):
            raise CommonFactorError("Maximal minors of the mu-basis are not proportional to the maps")
    if not lam:
        raise CommonFactorError("Hilbert-Burch scalar vanishes")
    return lam
