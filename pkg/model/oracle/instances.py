"""
Seeded random parameterizations, with optional planted structures.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from constants import COEFFICIENT_BOUND, INSTANCE_RETRIES
from model.exactlinalg import DenseMatrix, rank
from model.polyring import (RATIONALS, FieldSpec, GradedRingSpec, MultiDegree, Parameterization,
                            Polynomial, graded_basis, graded_dimension)
from utils import seeded_rng

LOGGER = logging.getLogger(__name__)

PLANTS = ("contracted_line", "base_point")


def default_ring(block_sizes: Sequence[int], field: FieldSpec = RATIONALS) -> GradedRingSpec:
    """[x,y], [x,y,z] for one block; x0..,y0..,z0.. for several."""
    block_sizes = tuple(block_sizes)
    if len(block_sizes) == 1 and block_sizes[0] in (2, 3):
        return GradedRingSpec((("x", "y", "z")[:block_sizes[0]],), field)
    if len(block_sizes) == 1:
        return GradedRingSpec((tuple(f"x{i}" for i in range(block_sizes[0])),), field)
    letters = "xyzuvw"
    if len(block_sizes) > len(letters):
        raise ValueError("Too many blocks")
    return GradedRingSpec(tuple(tuple(f"{letters[b]}{i}" for i in range(n))
                                for b, n in enumerate(block_sizes)), field)


@dataclass(frozen=True)
class InstanceSpec:
    blocks: tuple[int, ...]
    r: int
    degree: tuple[int, ...]
    field: FieldSpec = RATIONALS
    seed: int = 0
    plants: tuple[str, ...] = ()
    coefficient_bound: int = COEFFICIENT_BOUND

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "degree", tuple(self.degree))
        object.__setattr__(self, "plants", tuple(self.plants))
        if len(self.blocks) != len(self.degree):
            raise ValueError("One degree per block is required")
        unknown = set(self.plants) - set(PLANTS)
        if unknown:
            raise ValueError(f"Unknown plants: {sorted(unknown)}")
        if "contracted_line" in self.plants and (self.blocks != (3,) or self.r != 4
                                                 or self.degree[0] < 2):
            raise ValueError("A contracted line is planted on maps P^2 -> P^3 of degree >= 2")
        available = graded_dimension(self.ring(), self.degree) - ("base_point" in self.plants)
        if self.r > available:
            raise ValueError(f"{self.r} independent forms of degree {self.degree} do not exist "
                             f"(only {available} monomials)")

    def ring(self) -> GradedRingSpec:
        return default_ring(self.blocks, self.field)

    def to_json(self) -> dict:
        return {"blocks": list(self.blocks), "r": self.r, "degree": list(self.degree),
                "field": self.field.to_json(), "seed": self.seed, "plants": list(self.plants),
                "coefficient_bound": self.coefficient_bound}


def _random_form(ring: GradedRingSpec, nu: MultiDegree, rng, bound: int,
                 skip_first: bool = False) -> Polynomial:
    basis = graded_basis(ring, nu)
    terms = {m: rng.randint(-bound, bound) for m in basis}
    if skip_first and basis:
        terms[basis[0]] = 0
    return Polynomial.from_terms(ring, terms)


def _independent(param: Parameterization) -> bool:
    basis = graded_basis(param.ring, param.degree)
    rows = [[f.coefficient(m) for m in basis] for f in param.maps]
    return rank(DenseMatrix.from_rows(param.ring.field, rows, len(basis))) == param.r


def _draw(spec: InstanceSpec, rng) -> list[Polynomial]:
    ring = spec.ring()
    nu = MultiDegree(spec.degree)
    bound = spec.coefficient_bound
    base_point = "base_point" in spec.plants
    if "contracted_line" in spec.plants:
        x = Polynomial.variable(ring, ring.variables[0])
        lower = nu - MultiDegree.of(1)
        maps = [x * _random_form(ring, lower, rng, bound) for _ in range(3)]
        maps.append(_random_form(ring, nu, rng, bound, base_point))
        return maps
    return [_random_form(ring, nu, rng, bound, base_point) for _ in range(spec.r)]


def draw_instance(spec: InstanceSpec) -> tuple[Parameterization, int]:
    """
    Devuelve (parametrización, reintentos). Draws with linearly dependent maps
    or a common factor are retried with the next sub-seed.
    """
    ring = spec.ring()
    for attempt in range(INSTANCE_RETRIES):
        rng = seeded_rng(spec.seed * 1009 + attempt, f"instance {spec.blocks}->P^{spec.r - 1}")
        maps = _draw(spec, rng)
        if any(f.is_zero for f in maps):
            continue
        param = Parameterization.build(ring, maps)
        if param.removed_factor is not None or not _independent(param):
            continue
        if "contracted_line" in spec.plants and Polynomial.variable(ring, ring.variables[0]).divides(maps[3]):
            continue
        if attempt:
            LOGGER.info("Instance drawn after %d retries", attempt)
        return param, attempt
    raise ValueError(f"No admissible instance after {INSTANCE_RETRIES} draws")


def random_instance(spec: InstanceSpec) -> Parameterization:
    return draw_instance(spec)[0]
