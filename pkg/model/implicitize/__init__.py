"""Implicitize package: implicit equations, map degrees and the curve regularity bound"""

from .implicit import (ImplicitResult, degree_of_map_curve, hypersurface_implicit_gcd,
                       perfect_power, plane_curve_implicit)
from .regularity import RegularityBound, regularity_bound_curve, regularity_bound_from_degrees

__all__ = [
    "ImplicitResult", "perfect_power", "plane_curve_implicit", "degree_of_map_curve",
    "hypersurface_implicit_gcd", "RegularityBound", "regularity_bound_curve",
    "regularity_bound_from_degrees",
]
