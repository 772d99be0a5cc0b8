"""Congruence package: normal congruences of surfaces and orthogonal projection"""

from .congruence import (HYPOTHESIS_FINITE, HYPOTHESIS_NO_NEGATIVE_SECTION, NormalCongruence,
                         build_normal_congruence)
from .projection import DegenerateQueryError, FootPoint, ProjectionReport, default_degree, project_point
from .surface import DegenerateSurfaceError, NormalVector, SurfaceParam, foot_predicate, normal_vector

__all__ = [
    "SurfaceParam", "NormalVector", "DegenerateSurfaceError", "normal_vector", "foot_predicate",
    "NormalCongruence", "build_normal_congruence", "HYPOTHESIS_FINITE", "HYPOTHESIS_NO_NEGATIVE_SECTION",
    "project_point", "default_degree", "ProjectionReport", "FootPoint", "DegenerateQueryError",
]
