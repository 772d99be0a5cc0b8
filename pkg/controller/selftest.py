"""
Built-in acceptance suite behind the `selftest` command: worked examples and
seeded comparisons against the brute-force references.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from constants import INSTANCE_RETRIES
from model.congruence import SurfaceParam, build_normal_congruence, project_point
from model.fiberlab import fiber_degree, jacobian_minor_gcd, one_dim_fiber_decomposition
from model.implicitize import plane_curve_implicit
from model.matrixrep import Setting, build_rep, certify, threshold_multigraded
from model.oracle import (FiberTable, InstanceSpec, fiber_degree_exact_P1, implicit_identity_check,
                          is_reduced_at, random_instance)
from model.polyring import (RATIONALS, FieldSpec, GradedRingSpec, InconsistencyError, Polynomial,
                            parse_parameterization)
from model.syzygy import (downgrade, h1_coordinates, koszul_H1, mu_basis, rees_layer,
                          substitute_maps)
from utils import seeded_rng

LOGGER = logging.getLogger(__name__)

LINE = GradedRingSpec((("x", "y"),), RATIONALS)
PLANE = GradedRingSpec((("x", "y", "z"),), RATIONALS)
SURFACE = GradedRingSpec((("x1", "x2", "x3"),), RATIONALS)

TWISTED_CUBIC = ("x^3", "x^2*y", "x*y^2", "y^3")
CIRCLE = ("x^2+y^2", "2*x*y", "x^2-y^2")
DOUBLE_CONIC = ("x^4", "x^2*y^2", "y^4")
PLANTED = ("x*y^2", "x*y*z", "x*z^2", "y^3")
PLANE_SURFACE = ("x1", "x2", "x3", "0")
SPHERE = ("x1^2+x2^2+x3^2", "2*x1*x3", "2*x1*x2", "x1^2-x2^2-x3^2")

MORPHISM_PRIME = 101


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


class SelfTestFailure(InconsistencyError):
    def __init__(self, checks: list[Check]):
        failed = [c.name for c in checks if not c.passed]
        super().__init__(f"{len(failed)} self-test check(s) failed: {', '.join(failed)}")
        self.checks = checks


def _twisted_cubic(seed: int) -> tuple[bool, str]:
    param = parse_parameterization(TWISTED_CUBIC, LINE)
    if mu_basis(param).degrees != (1, 1, 1):
        return False, "mu-basis degrees differ from (1,1,1)"
    if build_rep(param, 1, force=True).shape != (2, 3):
        return False, "M_1 is not 2 x 3"
    M = build_rep(param, 2)
    rng = seeded_rng(seed, "twisted cubic image points")
    for _ in range(20):
        x = (rng.randint(-9, 9), rng.randint(1, 9))
        if fiber_degree(M, param.evaluate(x)).corank != 1:
            return False, f"corank at the image of {x} is not 1"
    if fiber_degree(M, (1, 0, 0, 1)).corank != 0:
        return False, "(1:0:0:1) is not off the image"
    return True, "mu = (1,1,1); corank 1 on 20 image points"


def _plane_curves(seed: int) -> tuple[bool, str]:
    param = parse_parameterization(CIRCLE, LINE)
    circle = plane_curve_implicit(param)
    conic = plane_curve_implicit(parse_parameterization(DOUBLE_CONIC, LINE))
    if not implicit_identity_check(param, circle.F):
        return False, f"F = {circle.F} does not vanish on the circle"
    if circle.e != 1 or circle.F.total_degree != 2:
        return False, f"circle gave e = {circle.e}, deg F = {circle.F.total_degree}"
    if conic.e != 2:
        return False, f"double conic gave e = {conic.e}"
    return True, f"circle F = {circle.F}; double conic e = 2"


def _curve_oracle(seed: int) -> tuple[bool, str]:
    rng = seeded_rng(seed, "curve oracle instances")
    compared = 0
    for k in range(4):
        r = 3 + k % 2
        spec = InstanceSpec((2,), r, (rng.randint(max(2, r - 1), 4),), seed=seed + k, coefficient_bound=5)
        param = random_instance(spec)
        certificate = certify(param)
        M = build_rep(param, certificate.region.lower_corner, certificate=certificate)
        for _ in range(3):
            x = (rng.randint(-5, 5), rng.randint(1, 5))
            p = param.evaluate(x)
            if not any(p):
                continue
            expected = fiber_degree_exact_P1(param, p)
            found = fiber_degree(M, p).corank
            if found != expected:
                return False, f"{param.texts()} at {x}: corank {found}, oracle {expected}"
            compared += 1
    return True, f"{compared} image points agree with the gcd oracle"


def base_point_free_instance(field: FieldSpec, d: int, seed: int):
    """Primera instancia P^2 -> P^3 de grado d sin puntos base, con su certificado."""
    for attempt in range(INSTANCE_RETRIES):
        param = random_instance(InstanceSpec((3,), 4, (d,), field=field, seed=seed + 1000 * attempt))
        certificate = certify(param)
        if certificate.setting == Setting.MORPHISM:
            return param, certificate
    raise ValueError(f"No base-point-free map of degree {d} after {INSTANCE_RETRIES} draws")


def _morphism_oracle(seed: int) -> tuple[bool, str]:
    field = FieldSpec.prime(MORPHISM_PRIME)
    rng = seeded_rng(seed, "morphism oracle points")
    compared, extension = 0, 0
    for k, d in enumerate((2, 3)):
        param, certificate = base_point_free_instance(field, d, seed + k)
        nu = 2 * (d - 1)
        M = build_rep(param, nu, certificate=certificate)
        M_next = build_rep(param, nu + 1, certificate=certificate)
        table = FiberTable(param)
        for _ in range(3):
            x = [rng.randrange(MORPHISM_PRIME) for _ in range(3)]
            if not any(x):
                continue
            p = param.evaluate(x)
            fiber = table.fiber(p)
            if not all(is_reduced_at(param, p, pt) for pt in fiber):
                continue
            found = fiber_degree(M, p).corank
            if found != fiber_degree(M_next, p).corank:
                return False, f"{param.texts()} at {x}: corank changes between nu = {nu} and {nu + 1}"
            if found < len(fiber):
                return False, f"{param.texts()} at {x}: corank {found} below {len(fiber)} F_q points"
            extension += found > len(fiber)
            compared += 1
    if not compared or extension * 3 > compared:
        return False, f"{extension} of {compared} fibers exceed their F_q point count"
    return True, f"{compared} image points agree with the F_q enumeration"


def _rees_layers(seed: int) -> tuple[bool, str]:
    param = parse_parameterization(TWISTED_CUBIC, LINE)
    for nu, ell in ((0, 2), (1, 2), (0, 3)):
        layer = rees_layer(param, nu, ell)
        piece = koszul_H1(param, nu + param.degree.total * ell)
        if len(layer) != len(piece):
            return False, f"layer ({nu},{ell}) has {len(layer)} equations, H_1 has {len(piece)}"
        for cycle, equation in zip(layer.cycles, layer.equations):
            if not substitute_maps(param, equation).is_zero:
                return False, f"{equation} does not vanish under T -> f"
            if h1_coordinates(piece, downgrade(param, equation)) != h1_coordinates(piece, cycle):
                return False, f"downgrade does not invert the upgrade in layer ({nu},{ell})"
    return True, "layers (0,2), (1,2), (0,3) match H_1"


def _planted(seed: int) -> tuple[bool, str]:
    param = parse_parameterization(PLANTED, PLANE)
    found = jacobian_minor_gcd(param)
    x = Polynomial.variable(PLANE, "x")
    if not x.divides(found.F):
        return False, f"x does not divide F = {found.F}"
    report = one_dim_fiber_decomposition(param, (0, 0, 0, 1), (0, 0, 0, 1))
    if report.h.monic() != x:
        return False, f"h_p = {report.h}"
    return True, f"F = {found.F}, bound {found.bound}"


def _regions(seed: int) -> tuple[bool, str]:
    P2 = threshold_multigraded("P2", 2, 1)
    P1P1 = threshold_multigraded("P1xP1", (1, 1), 1)
    ok = (P2.contains((4, 0)) and not P2.contains((3, 1)) and P2.contains((2, 2))
          and P1P1.contains((1, 1, 2)) and not P1P1.contains((1, 1, 1)))
    return ok, f"{P2.region}; {P1P1.region}"


def _projections(seed: int) -> tuple[bool, str]:
    plane = build_normal_congruence(SurfaceParam.of(SURFACE, PLANE_SURFACE))
    rng = seeded_rng(seed, "plane queries")
    for _ in range(3):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        report = project_point(plane, (1, a, b, c))
        feet = [f.foot for f in report.feet]
        if report.degree != 1 or feet != [(a, b, 0)]:
            return False, f"plane query ({a},{b},{c}) gave {feet}"
    sphere = build_normal_congruence(SurfaceParam.of(SURFACE, SPHERE), hypothesis="b",
                                     classify_base_locus=False)
    report = project_point(sphere, (1, 2, 0, 0))
    feet = sorted(f.foot for f in report.feet)
    if report.degree != 2 or feet != [(-1, 0, 0), (1, 0, 0)]:
        return False, f"sphere query (2,0,0) gave degree {report.degree}, feet {feet}"
    return True, "plane feet exact; sphere feet (+-1,0,0)"


CHECKS: tuple[tuple[str, Callable[[int], tuple[bool, str]]], ...] = (
    ("twisted cubic", _twisted_cubic),
    ("plane curves", _plane_curves),
    ("curve fibers against the oracle", _curve_oracle),
    ("morphism fibers against the enumeration", _morphism_oracle),
    ("Rees layers", _rees_layers),
    ("planted contracted line", _planted),
    ("multigraded regions", _regions),
    ("orthogonal projection", _projections),
)


def run_selftest(seed: int = 0) -> list[Check]:
    """Corre todas las verificaciones; lanza SelfTestFailure si alguna falla."""
    checks = []
    for name, check in CHECKS:
        try:
            passed, detail = check(seed)
        except Exception as err:
            passed, detail = False, f"{type(err).__name__}: {err}"
        LOGGER.info("Self-test %s: %s", name, "ok" if passed else "FAILED")
        checks.append(Check(name, bool(passed), detail))
    if not all(c.passed for c in checks):
        raise SelfTestFailure(checks)
    return checks
