"""Fiberlab package: fiber degrees, Fitting strata, fiber points, Jacobian tools, base locus"""

from model.syzygy import BaseLocusClass, BaseLocusKind, dim_base_locus, quotient_dimension

from .fibers import (FiberReport, Interpretation, TargetPoint, ZeroPointError, evaluate_float,
                     fiber_degree, fiber_degree_numeric, fitting_ideal_generators, fitting_stratum)
from .jacobian import (JacobianGcd, JacobianSheet, JacobianVanishesError, NotOneDimensionalError,
                       OneDimFiberReport, contracted_locus_generators, default_ell,
                       jacobian_minor_gcd, jacobian_sheet, one_dim_fiber_decomposition)
from .points import (KernelFiber, P1Fiber, SourcePoint, fiber_gcd_form, fiber_points_from_kernel,
                     fiber_points_P1, in_fiber, roots_univariate)

__all__ = [
    "TargetPoint", "FiberReport", "Interpretation", "ZeroPointError",
    "fiber_degree", "fiber_degree_numeric", "fitting_stratum", "fitting_ideal_generators",
    "evaluate_float",
    "P1Fiber", "SourcePoint", "KernelFiber", "fiber_gcd_form", "fiber_points_P1",
    "fiber_points_from_kernel", "in_fiber", "roots_univariate",
    "JacobianSheet", "JacobianGcd", "JacobianVanishesError", "NotOneDimensionalError",
    "OneDimFiberReport", "jacobian_sheet", "jacobian_minor_gcd", "one_dim_fiber_decomposition",
    "contracted_locus_generators", "default_ell",
    "BaseLocusKind", "BaseLocusClass", "dim_base_locus", "quotient_dimension",
]
