"""Oracle package: brute-force references and seeded random instances"""

from .instances import PLANTS, InstanceSpec, default_ring, draw_instance, random_instance
from .oracle import (FiberTable, enumerate_fiber_Fq, fiber_degree_exact_P1, implicit_identity_check,
                     is_reduced_at, point_count, projective_points)

__all__ = [
    "InstanceSpec", "PLANTS", "default_ring", "draw_instance", "random_instance",
    "fiber_degree_exact_P1", "enumerate_fiber_Fq", "projective_points", "point_count",
    "is_reduced_at", "implicit_identity_check", "FiberTable",
]
