"""
Brute-force references: exact fiber degrees for P^1 sources, fiber
enumeration over F_q, reducedness tests and implicit identity checks.
"""
from __future__ import annotations

import logging
from itertools import combinations, product
from typing import Iterator, Sequence

from constants import ENUMERATION_CAP, FQ_MAX
from model.exactlinalg import DenseMatrix, rank
from model.polyring import FieldSpec, Parameterization, Polynomial, gcd_all

LOGGER = logging.getLogger(__name__)


def fiber_degree_exact_P1(param: Parameterization, point: Sequence) -> int:
    """deg gcd_{i<j}(p_i f_j - p_j f_i), multiplicities included; 0 off the image."""
    if not param.ring.is_projective_line():
        raise ValueError("fiber_degree_exact_P1 needs a P^1 source")
    field = param.ring.field
    p = [field.coerce(c) for c in point]
    forms = [param.maps[j].scale(p[i]) - param.maps[i].scale(p[j])
             for i, j in combinations(range(param.r), 2)]
    forms = [g for g in forms if not g.is_zero]
    if not forms:
        raise ValueError("Point is zero")
    return gcd_all(forms).total_degree


def _space_points(n: int, field: FieldSpec) -> Iterator[tuple]:
    """Points of P^{n-1}(F_q), first nonzero coordinate equal to 1."""
    q = field.p
    one, elements = field.one, [field.from_int(a) for a in range(q)]
    for lead in range(n):
        for tail in product(elements, repeat=n - lead - 1):
            yield (field.zero,) * lead + (one,) + tail


def point_count(block_sizes: Sequence[int], q: int) -> int:
    total = 1
    for n in block_sizes:
        total *= (q ** n - 1) // (q - 1)
    return total


def projective_points(block_sizes: Sequence[int], field: FieldSpec, fq_max: int = FQ_MAX,
                      cap: int = ENUMERATION_CAP) -> Iterator[tuple[tuple, ...]]:
    """
    Enumeración canónica de P^{n_1-1} x ... x P^{n_s-1} sobre F_q.
    """
    if field.is_rational:
        raise ValueError("Point enumeration needs a prime field")
    if field.p > fq_max:
        raise ValueError(f"q = {field.p} exceeds the enumeration limit {fq_max}")
    count = point_count(block_sizes, field.p)
    if count > cap:
        raise ValueError(f"{count} source points exceed the enumeration cap {cap}")
    return product(*[list(_space_points(n, field)) for n in block_sizes])


def _proportional(u: Sequence, v: Sequence) -> bool:
    return all(a * d == b * c for (a, c), (b, d) in combinations(zip(u, v), 2))


def enumerate_fiber_Fq(param: Parameterization, point: Sequence, fq_max: int = FQ_MAX,
                       cap: int = ENUMERATION_CAP) -> list[tuple[tuple, ...]]:
    """Source points x over F_q with f(x) != 0 and f(x) proportional to p."""
    ring = param.ring
    field = ring.field
    p = [field.coerce(c) for c in point]
    if not any(p):
        raise ValueError("Point is zero")
    found = []
    for blocks in projective_points(ring.block_sizes, field, fq_max, cap):
        x = [c for block in blocks for c in block]
        image = param.evaluate(x)
        if any(image) and _proportional(image, p):
            found.append(blocks)
    LOGGER.debug("Enumerated fiber over %s: %d point(s)", p, len(found))
    return found


class FiberTable:
    """
    Todas las fibras sobre F_q en una sola pasada: imagen normalizada -> puntos fuente.
    Evaluation runs on residues mod q.
    """

    def __init__(self, param: Parameterization, fq_max: int = FQ_MAX, cap: int = ENUMERATION_CAP):
        ring = param.ring
        field = ring.field
        self.param = param
        self.field = field
        points = projective_points(ring.block_sizes, field, fq_max, cap)
        q = field.p
        terms = [[(field.canonical_int(c), exp) for exp, c in f.element.items()] for f in param.maps]
        self._fibers: dict[tuple[int, ...], list] = {}
        for blocks in points:
            x = [field.canonical_int(c) for block in blocks for c in block]
            image = []
            for f in terms:
                total = 0
                for c, exp in f:
                    for v, e in zip(x, exp):
                        if e:
                            c = c * pow(v, e, q) % q
                    total += c
                image.append(total % q)
            key = self._normalize(image)
            if key is not None:
                self._fibers.setdefault(key, []).append(blocks)
        LOGGER.debug("Fiber table of %s: %d image point(s)", param, len(self._fibers))

    def _normalize(self, values: Sequence[int]):
        q = self.field.p
        lead = next((v for v in values if v), None)
        if lead is None:
            return None
        inverse = pow(lead, -1, q)
        return tuple(v * inverse % q for v in values)

    def fiber(self, point: Sequence) -> list[tuple[tuple, ...]]:
        key = self._normalize([self.field.canonical_int(self.field.coerce(c)) for c in point])
        if key is None:
            raise ValueError("Point is zero")
        return list(self._fibers.get(key, ()))

    def __len__(self) -> int:
        return len(self._fibers)


def is_reduced_at(param: Parameterization, point: Sequence, x: Sequence[Sequence]) -> bool:
    """
    Rango completo del jacobiano del sistema afín p_j f_i - p_i f_j = 0 en x,
    in the chart where each block's first nonzero coordinate is 1.
    """
    ring = param.ring
    field = ring.field
    p = [field.coerce(c) for c in point]
    j = next(k for k, c in enumerate(p) if c)
    blocks = [[field.coerce(c) for c in block] for block in x]
    values, free = [], []
    for b, block in enumerate(blocks):
        lead = next(k for k, c in enumerate(block) if c)
        start = ring.block_slices[b][0]
        values.extend(c / block[lead] for c in block)
        free.extend(start + k for k in range(len(block)) if k != lead)
    equations = [param.maps[i].scale(p[j]) - param.maps[j].scale(p[i])
                 for i in range(param.r) if i != j]
    rows = [[g.diff(ring.variables[v]).evaluate(values) for v in free] for g in equations]
    if not free:
        return True
    return rank(DenseMatrix.from_rows(field, rows, len(free))) == len(free)


def implicit_identity_check(param: Parameterization, F: Polynomial) -> bool:
    """True iff F(f_1, ..., f_r) expands to zero."""
    if F.ring.nvars != param.r:
        raise ValueError(f"F has {F.ring.nvars} variables, expected {param.r}")
    return F.compose(list(param.maps)).is_zero
