"""
Multigraded polynomial rings over products of projective spaces.

A ring is a list of variable blocks, one per projective factor. Monomials of a
given multidegree are listed lexicographically descending inside each block,
with the first block varying slowest.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import comb
from typing import Iterable, Iterator, Sequence

from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from .field import RATIONALS, FieldSpec

LOGGER = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class MultiDegree:
    components: tuple[int, ...]

    @classmethod
    def of(cls, *components: int) -> "MultiDegree":
        return cls(tuple(int(c) for c in components))

    @classmethod
    def coerce(cls, value: "MultiDegree | int | Iterable[int]") -> "MultiDegree":
        if isinstance(value, MultiDegree):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(tuple(int(c) for c in value))

    @classmethod
    def zero(cls, s: int) -> "MultiDegree":
        return cls((0,) * s)

    @classmethod
    def unit(cls, s: int, b: int) -> "MultiDegree":
        return cls(tuple(1 if i == b else 0 for i in range(s)))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __getitem__(self, i: int) -> int:
        return self.components[i]

    def _check(self, other: "MultiDegree") -> "MultiDegree":
        other = MultiDegree.coerce(other)
        if len(other) != len(self):
            raise ValueError(f"Multidegrees {self} and {other} have different lengths")
        return other

    def __add__(self, other: "MultiDegree") -> "MultiDegree":
        other = self._check(other)
        return MultiDegree(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "MultiDegree") -> "MultiDegree":
        other = self._check(other)
        return MultiDegree(tuple(a - b for a, b in zip(self, other)))

    def __mul__(self, k: int) -> "MultiDegree":
        return MultiDegree(tuple(a * k for a in self))

    __rmul__ = __mul__

    def __le__(self, other: "MultiDegree") -> bool:
        other = self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def __ge__(self, other: "MultiDegree") -> bool:
        return self._check(other) <= self

    def __lt__(self, other: "MultiDegree") -> bool:
        return self <= other and self != MultiDegree.coerce(other)

    def __gt__(self, other: "MultiDegree") -> bool:
        return self >= other and self != MultiDegree.coerce(other)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self)

    def clamp(self) -> "MultiDegree":
        return MultiDegree(tuple(max(a, 0) for a in self))

    @property
    def total(self) -> int:
        return sum(self.components)

    def to_json(self) -> list[int]:
        return list(self.components)

    def __str__(self) -> str:
        if len(self) == 1:
            return str(self.components[0])
        return "(" + ",".join(str(a) for a in self) + ")"


@dataclass(frozen=True)
class GradedRingSpec:
    blocks: tuple[tuple[str, ...], ...]
    field: FieldSpec = RATIONALS

    def __post_init__(self):
        blocks = tuple(tuple(block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("A ring needs at least one block of variables")
        seen = set()
        for block in blocks:
            if len(block) < 2:
                raise ValueError(f"Block {list(block)} has fewer than 2 variables")
            for name in block:
                if not _NAME.match(name):
                    raise ValueError(f"Invalid variable name {name!r}")
                if name in seen:
                    raise ValueError(f"Variable {name!r} appears twice")
                seen.add(name)

    @classmethod
    def projective(cls, names: Sequence[str], field: FieldSpec = RATIONALS) -> "GradedRingSpec":
        return cls((tuple(names),), field)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for block in self.blocks for name in block)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def nblocks(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    @cached_property
    def block_slices(self) -> tuple[tuple[int, int], ...]:
        slices, start = [], 0
        for block in self.blocks:
            slices.append((start, start + len(block)))
            start += len(block)
        return tuple(slices)

    @cached_property
    def poly_ring(self) -> PolyRing:
        return PolyRing(list(self.variables), self.field.domain, lex)

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"Unknown variable {name!r}") from None

    def block_of(self, index: int) -> int:
        for b, (start, stop) in enumerate(self.block_slices):
            if start <= index < stop:
                return b
        raise IndexError(index)

    def multidegree_of(self, exponents: Monomial) -> MultiDegree:
        return MultiDegree(tuple(sum(exponents[a:b]) for a, b in self.block_slices))

    def zero_degree(self) -> MultiDegree:
        return MultiDegree.zero(self.nblocks)

    def coerce_degree(self, nu) -> MultiDegree:
        nu = MultiDegree.coerce(nu)
        if len(nu) != self.nblocks:
            raise ValueError(f"Degree {nu} does not match {self.nblocks} block(s)")
        return nu

    def is_projective_line(self) -> bool:
        return self.block_sizes == (2,)

    def extend(self, *blocks: Sequence[str]) -> "GradedRingSpec":
        return GradedRingSpec(self.blocks + tuple(tuple(b) for b in blocks), self.field)

    def with_field(self, field: FieldSpec) -> "GradedRingSpec":
        return GradedRingSpec(self.blocks, field)

    def monomial_text(self, exponents: Monomial) -> str:
        factors = []
        for name, e in zip(self.variables, exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"

    def to_json(self) -> dict:
        return {"blocks": [list(block) for block in self.blocks], "field": self.field.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "GradedRingSpec":
        if not isinstance(obj, dict):
            raise ValueError("ring must be a JSON object")
        if "blocks" not in obj:
            raise KeyError("ring.blocks")
        blocks = obj["blocks"]
        if not isinstance(blocks, list) or not all(
                isinstance(b, list) and all(isinstance(v, str) for v in b) for b in blocks):
            raise ValueError("ring.blocks must be a list of lists of variable names")
        return cls(tuple(tuple(b) for b in obj["blocks"]), FieldSpec.from_json(obj.get("field", "Q")))

    def __str__(self) -> str:
        return " x ".join("[" + ",".join(b) + "]" for b in self.blocks) + f" over {self.field.label}"


def _block_monomials(n: int, k: int) -> list[Monomial]:
    """Monomials of degree k in n variables, lexicographically descending."""
    if n == 1:
        return [(k,)]
    out = []
    for e0 in range(k, -1, -1):
        for rest in _block_monomials(n - 1, k - e0):
            out.append((e0,) + rest)
    return out


@lru_cache(maxsize=512)
def graded_basis(ring: GradedRingSpec, nu) -> tuple[Monomial, ...]:
    """
    Monomials of multidegree nu. Empty if some component is negative.
    """
    nu = ring.coerce_degree(nu)
    if not nu.is_nonnegative():
        return ()
    per_block = [_block_monomials(len(block), k) for block, k in zip(ring.blocks, nu)]
    basis = tuple(sum(parts, ()) for parts in product(*per_block))
    LOGGER.debug("graded_basis %s degree %s: %d monomials", ring, nu, len(basis))
    return basis


def graded_dimension(ring: GradedRingSpec, nu) -> int:
    nu = ring.coerce_degree(nu)
    if not nu.is_nonnegative():
        return 0
    dim = 1
    for size, k in zip(ring.block_sizes, nu):
        dim *= comb(k + size - 1, size - 1)
    return dim


def degrees_up_to(nu_max: MultiDegree) -> list[MultiDegree]:
    """All 0 <= nu' <= nu_max, by total degree then lexicographically."""
    ranges = [range(k + 1) for k in nu_max]
    out = [MultiDegree(c) for c in product(*ranges)]
    out.sort(key=lambda m: (m.total, m.components))
    return out


def add_monomials(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))
