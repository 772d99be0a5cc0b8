"""
Command dispatch: one static method of Action per command, and run(), which
maps failures to exit codes and always writes a report.
"""
from __future__ import annotations

import json
import logging
from typing import Optional, Sequence

import constants
from model.congruence import (DegenerateQueryError, SurfaceParam, build_normal_congruence,
                              project_point)
from model.fiberlab import (NotOneDimensionalError, TargetPoint, contracted_locus_generators,
                            fiber_degree, fiber_degree_numeric, fiber_points_from_kernel,
                            fiber_points_P1, fitting_ideal_generators, fitting_stratum,
                            jacobian_minor_gcd, jacobian_sheet, one_dim_fiber_decomposition)
from model.implicitize import (degree_of_map_curve, hypersurface_implicit_gcd, plane_curve_implicit,
                               regularity_bound_curve)
from model.matrixrep import MatrixRep, UncertifiedDegreeError, certify, threshold_curve
from model.oracle import enumerate_fiber_Fq, implicit_identity_check, is_reduced_at
from model.polyring import FieldSpec, InconsistencyError, Parameterization
from model.syzygy import hilbert_burch_check, mu_basis
from utils import Settings
from view.report import export_matrices, matrix_summary, write_report

from .cache import MatrixCache
from .jobs import JobSpec
from .selftest import run_selftest

LOGGER = logging.getLogger(__name__)


def parse_point(field: FieldSpec, texts: Sequence[str]) -> TargetPoint:
    return TargetPoint.of(field, [field.parse_element(t) for t in texts])


def _matrix(job: JobSpec, settings: Settings, param: Parameterization) -> tuple[MatrixRep, bool, str]:
    """M_nu from the cache; nu defaults to the lower corner of the certified region."""
    opts = job.options
    nu = opts.nu
    if nu is None:
        nu = certify(param, reg=opts.reg, indeg=opts.indeg).region.lower_corner
        LOGGER.info("Using the certified degree %s", nu)
    cache = MatrixCache(settings.cache_dir)
    return cache.get_or_build(param, nu, lmax=opts.lmax, reg=opts.reg, indeg=opts.indeg,
                              force=opts.force, lmax_cap=settings.lmax_cap)


def _enumerated(param: Parameterization, p: TargetPoint, corank: int, settings: Settings) -> dict:
    """F_q points of the fiber by brute force, compared with the corank when reduced."""
    field = param.ring.field
    if field.is_rational:
        raise ValueError("options.oracle needs a prime field")
    found = enumerate_fiber_Fq(param, p.coords, settings.fq_max, settings.enumeration_cap)
    reduced = all(is_reduced_at(param, p.coords, x) for x in found)
    fmt = field.format_element
    entry = {"points": [[[fmt(c) for c in block] for block in x] for x in found],
             "reduced": reduced, "diagnostics": []}
    if reduced and len(found) != corank:
        LOGGER.warning("%d F_q point(s) over %s against corank %d", len(found), p, corank)
        entry["diagnostics"].append("point count differs from the corank; "
                                    "some fiber points lie outside F_q")
    return entry


class Action:

    @staticmethod
    def mubasis(job: JobSpec, settings: Settings):
        param = job.parameterization()
        mu = mu_basis(param)
        fmt = param.ring.field.format_element
        result = {
            "maps": param.texts(),
            "mu": list(mu.degrees),
            "basis": [[c.to_text() for c in col] for col in mu.columns],
            "hilbert_burch_scalar": fmt(hilbert_burch_check(mu)),
            "certificate": threshold_curve(mu).to_json(),
        }
        if param.r >= 3:
            result["regularity"] = regularity_bound_curve(mu).to_json()
        return result, {}

    @staticmethod
    def matrep(job: JobSpec, settings: Settings):
        param = job.parameterization()
        M, hit, path = _matrix(job, settings, param)
        result = matrix_summary(M)
        result["cache"] = {"hit": hit, "path": path}
        return result, {"M": M}

    @staticmethod
    def fiber(job: JobSpec, settings: Settings):
        """
        Grado de la fibra en cada punto; preimágenes exactas (fuente P^1) o por
        el método del núcleo en los demás casos.
        """
        param = job.parameterization()
        ring, field = param.ring, param.ring.field
        opts = job.options
        M, hit, _ = _matrix(job, settings, param)
        fibers = []
        for texts in opts.points:
            if opts.numeric:
                coords = [field.to_float(field.parse_element(t)) for t in texts]
                fibers.append(fiber_degree_numeric(M, coords, settings.numeric_tolerance).to_json())
                continue
            p = parse_point(field, texts)
            report = fiber_degree(M, p)
            entry = report.to_json()
            if report.corank:
                if ring.is_projective_line():
                    entry["preimage"] = fiber_points_P1(param, p).to_json()
                else:
                    kernel = fiber_points_from_kernel(M, p, seed=opts.seed)
                    entry["preimage"] = {"points": [pt.texts(ring) for pt in kernel],
                                         "approximate": kernel.approximate,
                                         "diagnostics": list(kernel.diagnostics)}
            if opts.oracle:
                entry["enumerated"] = _enumerated(param, p, report.corank, settings)
            fibers.append(entry)
        return {"nu": M.nu.to_json(), "valid": M.valid, "cache_hit": hit, "fibers": fibers}, {}

    @staticmethod
    def strata(job: JobSpec, settings: Settings):
        param = job.parameterization()
        field = param.ring.field
        M, _, _ = _matrix(job, settings, param)
        points = []
        for texts in job.options.points:
            p = parse_point(field, texts)
            points.append({"point": p.texts(), "stratum": fitting_stratum(M, p)})
        ideals = [{"i": i, "generators": [g.to_text() for g in fitting_ideal_generators(M, i)]}
                  for i in job.options.fitting]
        return {"nu": M.nu.to_json(), "certified": M.valid, "points": points,
                "fitting_ideals": ideals}, {}

    @staticmethod
    def implicitize(job: JobSpec, settings: Settings):
        param = job.parameterization()
        seed = job.options.seed
        if param.ring.is_projective_line() and param.r == 3:
            implicit = plane_curve_implicit(param)
            return {"implicit": implicit.to_json(), "degree_of_map": implicit.e}, {}
        if param.ring.is_projective_line():
            return {"implicit": None, "degree_of_map": degree_of_map_curve(param, seed),
                    "note": f"the image is a curve of codimension {param.r - 2}"}, {}
        M, _, _ = _matrix(job, settings, param)
        implicit = hypersurface_implicit_gcd(M, seed, settings.minor_stabilization)
        if not implicit_identity_check(param, implicit.F):
            raise InconsistencyError(f"F = {implicit.F} does not vanish on the image")
        return {"nu": M.nu.to_json(), "implicit": implicit.to_json()}, {"M": M}

    @staticmethod
    def jacfibers(job: JobSpec, settings: Settings):
        param = job.parameterization()
        field = param.ring.field
        opts = job.options
        sheet = jacobian_sheet(param)
        found = jacobian_minor_gcd(param, sheet)
        ell = None if opts.ell is None else [field.parse_element(t) for t in opts.ell]
        fibers = []
        for texts in opts.points:
            p = parse_point(field, texts)
            try:
                fibers.append(one_dim_fiber_decomposition(param, p, ell).to_json())
            except NotOneDimensionalError as err:
                LOGGER.warning("%s", err)
                fibers.append({"point": p.texts(), "h": None, "diagnostics": [str(err)]})
        result = {"F": found.F.to_text(), "bound": found.bound, "fibers": fibers}
        if opts.drop is not None:
            result["contracted_locus"] = [g.to_text() for g in
                                          contracted_locus_generators(param, opts.drop, sheet)]
        return result, {}

    @staticmethod
    def project(job: JobSpec, settings: Settings):
        opts = job.options
        surface = SurfaceParam(job.parameterization())
        cong = build_normal_congruence(surface, hypothesis=opts.hypothesis,
                                       justification=opts.justification,
                                       classify_base_locus=opts.hypothesis is None,
                                       window=settings.base_locus_window)
        field = surface.ring.field
        projections = [project_point(cong, parse_point(field, texts), opts.nu, opts.seed).to_json()
                       for texts in opts.points]
        return {"congruence": cong.to_json(), "certificate": cong.certificate().to_json(),
                "projections": projections}, {}

    @staticmethod
    def selftest(job: JobSpec, settings: Settings):
        checks = run_selftest(job.options.seed)
        return {"checks": [c.to_json() for c in checks], "passed": len(checks)}, {}


def exit_code_for(err: BaseException) -> int:
    if isinstance(err, UncertifiedDegreeError):
        return constants.EXIT_UNCERTIFIED
    if isinstance(err, DegenerateQueryError):
        return constants.EXIT_DEGENERATE_QUERY
    if isinstance(err, ArithmeticError):
        return constants.EXIT_INCONSISTENT
    if isinstance(err, (ValueError, SyntaxError, KeyError, FileNotFoundError, json.JSONDecodeError)):
        return constants.EXIT_INVALID_INPUT
    LOGGER.error("Unexpected %s", type(err).__name__, exc_info=err)
    return constants.EXIT_INCONSISTENT


def run(job: JobSpec, settings: Optional[Settings] = None) -> tuple[int, dict]:
    """
    Ejecuta el job, escribe el reporte JSON (y las exportaciones) y devuelve
    (código de salida, reporte).
    """
    opts = job.options
    report = {"command": job.command, "seed": opts.seed}
    LOGGER.info("Command %s started (seed %d)", job.command, opts.seed)
    try:
        settings = job.settings(Settings() if settings is None else settings)
        result, matrices = getattr(Action, job.command)(job, settings)
        report.update(status="ok", exit_code=constants.EXIT_OK, result=result)
        exports = export_matrices(matrices, opts.output, opts.format)
        if exports:
            report["exports"] = exports
    except Exception as err:
        code = exit_code_for(err)
        LOGGER.error("Command %s failed (exit %d): %s", job.command, code, err)
        report.update(status="error", exit_code=code, error=f"{type(err).__name__}: {err}")
        checks = getattr(err, "checks", None)
        if checks is not None:
            report["result"] = {"checks": [c.to_json() for c in checks]}
    write_report(report, opts.output)
    LOGGER.info("Command %s finished with exit code %d", job.command, report["exit_code"])
    return report["exit_code"], report
