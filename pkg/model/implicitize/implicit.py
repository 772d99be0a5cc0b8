"""
Implicit equations from elimination matrices: the determinant of M_{d-1}
for plane curves and the gcd of maximal minors for hypersurfaces.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd as int_gcd
from typing import Optional

from constants import (DEFAULT_SEED, GENERIC_FIBER_SAMPLES, INSTANCE_RETRIES, MINOR_EXHAUSTIVE_LIMIT,
                       MINOR_SAMPLE_CAP, MINOR_STABILIZATION)
from model.exactlinalg import symbolic_determinant
from model.fiberlab import fiber_degree
from model.matrixrep import MatrixRep, build_rep, certify
from model.polyring import InconsistencyError, Parameterization, Polynomial, gcd
from utils import seeded_rng

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ImplicitResult:
    F: Polynomial
    e: int
    method: str
    scalar: object = None
    extraneous: tuple[Polynomial, ...] = ()
    caveats: tuple[str, ...] = ()

    def to_json(self) -> dict:
        fmt = self.F.ring.field.format_element
        return {
            "F": self.F.to_text(),
            "e": self.e,
            "method": self.method,
            "scalar": None if self.scalar is None else fmt(self.scalar),
            "extraneous": [g.to_text() for g in self.extraneous],
            "caveats": list(self.caveats),
        }


def _radical_by_derivatives(poly: Polynomial) -> Polynomial:
    """poly / gcd(poly, all partials): F when poly = c*F^e with F squarefree."""
    g = poly
    for name in poly.ring.variables:
        g = gcd(g, poly.diff(name))
    return poly.exquo(g).monic()


def perfect_power(poly: Polynomial) -> tuple[object, Polynomial, int]:
    """
    (c, F, e) con poly = c * F^e, e máximo y F mónico; verificado re-elevando.
    Over Q the exponents come from sympy's square-free decomposition; over F_p
    from the derivative gcd, falling back to e = 1 when re-powering fails.
    """
    if poly.is_zero:
        raise ValueError("The zero polynomial is not a power")
    ring = poly.ring
    lc = poly.leading_coefficient()
    if poly.is_constant():
        return lc, Polynomial.one(ring), 1
    candidate: Optional[tuple[Polynomial, int]] = None
    if ring.field.is_rational:
        _, parts = poly.element.sqf_list()
        e = 0
        for _, k in parts:
            e = int_gcd(e, k)
        F = Polynomial.one(ring)
        for f, k in parts:
            F = F * Polynomial(ring, f) ** (k // e)
        candidate = (F.monic(), e)
    else:
        F = _radical_by_derivatives(poly)
        if F.total_degree > 0 and poly.total_degree % F.total_degree == 0:
            candidate = (F, poly.total_degree // F.total_degree)
    if candidate is not None:
        F, e = candidate
        c = lc / F.leading_coefficient() ** e
        if F ** e * c == poly:
            return c, F, e
    return lc, poly.monic(), 1


def _vanishes_on_image(F: Polynomial, param: Parameterization) -> bool:
    return F.compose(list(param.maps)).is_zero


def plane_curve_implicit(param: Parameterization) -> ImplicitResult:
    """
    det(M_{d-1}) = c * F^e con e = deg(psi) y e * deg F = d.
    """
    if not param.ring.is_projective_line() or param.r != 3:
        raise ValueError("plane_curve_implicit needs a map P^1 -> P^2")
    d = param.degree.total
    M = build_rep(param, d - 1, force=True)
    rows, cols = M.shape
    if rows != cols:
        raise InconsistencyError(f"M_{d - 1} is {rows} x {cols}, expected square")
    det = symbolic_determinant(M.as_rows())
    if det.is_zero:
        raise InconsistencyError("det M_{d-1} vanishes; the maps share a factor")
    c, F, e = perfect_power(det)
    if not _vanishes_on_image(F, param):
        raise InconsistencyError(f"F = {F} does not vanish on the parameterization")
    if e * F.total_degree != d:
        raise InconsistencyError(f"e * deg F = {e * F.total_degree} differs from d = {d}")
    LOGGER.info("Plane curve: F = %s, e = %d", F, e)
    return ImplicitResult(F, e, "determinant", c)


def _random_source_point(param: Parameterization, rng) -> list:
    field = param.ring.field
    for _ in range(INSTANCE_RETRIES):
        x = [field.from_int(rng.randint(-9, 9)) for _ in range(param.ring.nvars)]
        if any(param.evaluate(x)):
            return x
    raise InconsistencyError("No source point with a nonzero image found")


def degree_of_map_curve(param: Parameterization, seed: int = DEFAULT_SEED,
                        samples: int = GENERIC_FIBER_SAMPLES) -> int:
    """
    deg(psi) for a curve parameterization: e of the determinant when r = 3,
    else the fiber degree at psi(x) for random x with a certified M_nu.
    """
    if not param.ring.is_projective_line():
        raise ValueError("degree_of_map_curve needs a P^1 source")
    if param.r < 3:
        raise ValueError("degree_of_map_curve needs r >= 3")
    if param.r == 3:
        return plane_curve_implicit(param).e
    certificate = certify(param)
    M = build_rep(param, certificate.region.lower_corner, certificate=certificate)
    rng = seeded_rng(seed, "generic fibers")
    found = {fiber_degree(M, param.evaluate(_random_source_point(param, rng))).corank
             for _ in range(samples)}
    if len(found) != 1:
        raise InconsistencyError(f"Generic fiber samples disagree: {sorted(found)}")
    return found.pop()


def _maximal_minor(M: MatrixRep, cols: tuple[int, ...]) -> Polynomial:
    return symbolic_determinant([[row[j] for j in cols] for row in M.entries])


def _minor_gcd(M: MatrixRep, columns: list[int], seed: int,
               stabilization: int) -> tuple[Polynomial, int]:
    rows = M.shape[0]
    total = comb(len(columns), rows)
    zero = Polynomial.zero(M.param.target_ring)
    H = zero
    if total <= MINOR_EXHAUSTIVE_LIMIT:
        for subset in combinations(columns, rows):
            H = gcd(H, _maximal_minor(M, subset))
        return H, total
    rng = seeded_rng(seed, "maximal minor sampling")
    stable, used = 0, 0
    while used < MINOR_SAMPLE_CAP and stable < stabilization:
        subset = tuple(sorted(rng.sample(columns, rows)))
        minor = _maximal_minor(M, subset)
        used += 1
        if minor.is_zero:
            continue
        new = gcd(H, minor)
        stable = stable + 1 if (new == H and not H.is_zero) else 0
        H = new
        LOGGER.debug("minor %d: gcd degree %d", used, H.total_degree)
    return H, used


def _split_factors(H: Polynomial, param: Parameterization):
    """(vanishing factors with multiplicity, extraneous factors) of H over Q."""
    _, factors = H.element.factor_list()
    vanishing, extraneous = [], []
    for f, k in factors:
        g = Polynomial(H.ring, f).monic()
        if _vanishes_on_image(g, param):
            vanishing.append((g, k))
        else:
            extraneous.append(g)
    return vanishing, extraneous


def hypersurface_implicit_gcd(M: MatrixRep, seed: int = DEFAULT_SEED,
                              stabilization: int = MINOR_STABILIZATION) -> ImplicitResult:
    """
    H = gcd of the maximal minors of M (exhaustive for few column subsets,
    sampled until stable otherwise), split as F^delta times extraneous factors.
    """
    param = M.param
    columns = [j for j in range(M.shape[1]) if any(not row[j].is_zero for row in M.entries)]
    rows = M.shape[0]
    if rows > len(columns):
        raise ValueError(f"{rows} rows but only {len(columns)} nonzero columns")
    caveats = list(M.diagnostics)
    if not M.valid:
        caveats.append(f"M_{M.nu} is not certified")
    H, used = _minor_gcd(M, columns, seed, stabilization)
    if H.is_zero:
        raise ValueError("All maximal minors vanish; the image is not a hypersurface")
    if not _vanishes_on_image(H, param):
        raise InconsistencyError(f"gcd of minors {H} does not vanish on the parameterization")
    extraneous: tuple[Polynomial, ...] = ()
    if param.ring.field.is_rational:
        vanishing, extra = _split_factors(H, param)
        if len(vanishing) != 1:
            raise InconsistencyError(f"{len(vanishing)} factors of H vanish on the image")
        F, e = vanishing[0]
        extraneous = tuple(extra)
        if extraneous:
            LOGGER.warning("Extraneous factors from contracted fibers: %s",
                           ", ".join(str(g) for g in extraneous))
            caveats.append("extraneous factors come from contracted fibers at non-lci base points")
        scalar = None
    else:
        scalar, F, e = perfect_power(H)
        caveats.append("extraneous factors are not split over a prime field")
    LOGGER.info("Hypersurface gcd from %d minors: F = %s, delta = %d", used, F, e)
    return ImplicitResult(F, e, "minor-gcd", scalar, extraneous, tuple(caveats))
