"""
Polynomials of a multigraded ring and parameterizations psi = (f_1 : ... : f_r).

Polynomial wraps a sympy PolyElement together with the GradedRingSpec it lives
in; the wrapper is treated as immutable.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Dict, Iterable, Mapping, Optional, Sequence

from sympy.polys.polyerrors import ExactQuotientFailed

from .errors import InexactDivisionError, NotHomogeneousError
from .ring import GradedRingSpec, Monomial, MultiDegree

LOGGER = logging.getLogger(__name__)


class Polynomial:
    __slots__ = ("ring", "element")

    def __init__(self, ring: GradedRingSpec, element):
        self.ring = ring
        self.element = element

    # ---------------------------------- constructors

    @classmethod
    def zero(cls, ring: GradedRingSpec) -> "Polynomial":
        return cls(ring, ring.poly_ring.zero)

    @classmethod
    def one(cls, ring: GradedRingSpec) -> "Polynomial":
        return cls(ring, ring.poly_ring.one)

    @classmethod
    def constant(cls, ring: GradedRingSpec, c) -> "Polynomial":
        return cls(ring, ring.poly_ring.ground_new(ring.field.coerce(c)))

    @classmethod
    def variable(cls, ring: GradedRingSpec, name: str) -> "Polynomial":
        return cls(ring, ring.poly_ring.gens[ring.index_of(name)])

    @classmethod
    def monomial(cls, ring: GradedRingSpec, exponents: Monomial, c=1) -> "Polynomial":
        return cls.from_terms(ring, {tuple(exponents): c})

    @classmethod
    def from_terms(cls, ring: GradedRingSpec, terms: Mapping[Monomial, object]) -> "Polynomial":
        coerce = ring.field.coerce
        return cls(ring, ring.poly_ring.from_dict({tuple(m): coerce(c) for m, c in terms.items()}))

    # ---------------------------------- queries

    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self.element.items())

    @property
    def is_zero(self) -> bool:
        return not self.element

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.element.keys())

    def coefficient(self, exponents: Monomial):
        return self.element.get(tuple(exponents), self.ring.field.zero)

    def multidegrees(self) -> set[MultiDegree]:
        return {self.ring.multidegree_of(m) for m in self.element.keys()}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    @property
    def multidegree(self) -> Optional[MultiDegree]:
        """Common multidegree, None for zero; raises if inhomogeneous."""
        degrees = self.multidegrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise NotHomogeneousError(f"{self} is not homogeneous")
        return next(iter(degrees))

    @property
    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(m) for m in self.element.keys())

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        ring = self.ring
        return sorted(self.element.items(),
                      key=lambda item: (ring.multidegree_of(item[0]).components, item[0]),
                      reverse=True)

    def leading_coefficient(self):
        if self.is_zero:
            return self.ring.field.zero
        return self.sorted_terms()[0][1]

    # ---------------------------------- arithmetic

    def _other(self, other) -> object:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"Ring mismatch: {self.ring} vs {other.ring}")
            return other.element
        if isinstance(other, int):
            return self.ring.poly_ring.ground_new(self.ring.field.from_int(other))
        return self.ring.poly_ring.ground_new(self.ring.field.coerce(other))

    def __add__(self, other) -> "Polynomial":
        return Polynomial(self.ring, self.element + self._other(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return Polynomial(self.ring, self.element - self._other(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial(self.ring, self._other(other) - self.element)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, -self.element)

    def __mul__(self, other) -> "Polynomial":
        return Polynomial(self.ring, self.element * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("Negative exponent")
        return Polynomial(self.ring, self.element ** e)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.element == other.element
        if isinstance(other, int):
            return self.element == self._other(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.element.items())))

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.ring, self.element.mul_ground(self.ring.field.coerce(c)))

    def exquo(self, other: "Polynomial") -> "Polynomial":
        try:
            return Polynomial(self.ring, self.element.exquo(self._other(other)))
        except ExactQuotientFailed:
            raise InexactDivisionError(f"{other} does not divide {self}") from None

    def divides(self, other: "Polynomial") -> bool:
        if self.is_zero:
            return other.is_zero
        try:
            other.exquo(self)
        except InexactDivisionError:
            return False
        return True

    def monic(self) -> "Polynomial":
        """Leading coefficient (in the documented term order) equal to 1."""
        if self.is_zero:
            return self
        return Polynomial(self.ring, self.element.quo_ground(self.leading_coefficient()))

    def diff(self, name: str) -> "Polynomial":
        x = self.ring.poly_ring.gens[self.ring.index_of(name)]
        return Polynomial(self.ring, self.element.diff(x))

    def evaluate(self, point: Sequence) -> object:
        """Value at a point given as field elements (or ints) for every variable."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise ValueError(f"Point has {len(point)} coordinates, ring has {ring.nvars} variables")
        values = [ring.field.coerce(v) for v in point]
        total = ring.field.zero
        for monom, coeff in self.element.items():
            term = coeff
            for v, e in zip(values, monom):
                if e:
                    term = term * v ** e
            total += term
        return total

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute images[i] for the i-th variable (e.g. T_i -> f_i)."""
        if len(images) != self.ring.nvars:
            raise ValueError("One image per variable is required")
        target = images[0].ring
        if target.field != self.ring.field:
            raise ValueError("Composition across different fields")
        powers: Dict[tuple[int, int], object] = {}

        def power(i: int, e: int):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i].element ** e
            return powers[key]

        result = target.poly_ring.zero
        for monom, coeff in self.element.items():
            term = target.poly_ring.ground_new(coeff)
            for i, e in enumerate(monom):
                if e:
                    term = term * power(i, e)
            result += term
        return Polynomial(target, result)

    def lift(self, ring: GradedRingSpec) -> "Polynomial":
        return lift(self, ring)

    # ---------------------------------- text

    def to_text(self) -> str:
        return to_text(self)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({to_text(self)!r})"


def to_text(poly: Polynomial) -> str:
    """Canonical printer; parse_polynomial(to_text(p)) == p."""
    if poly.is_zero:
        return "0"
    ring, fld = poly.ring, poly.ring.field
    parts = []
    for k, (monom, coeff) in enumerate(poly.sorted_terms()):
        text = fld.format_element(coeff)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        mono = ring.monomial_text(monom)
        if mono == "1":
            body = text
        elif text == "1":
            body = mono
        else:
            body = f"{text}*{mono}"
        if k == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def lift(poly: Polynomial, ring: GradedRingSpec) -> Polynomial:
    """Embed poly into a ring containing all of its variables."""
    positions = [ring.index_of(name) for name in poly.ring.variables]
    terms = {}
    for monom, coeff in poly.element.items():
        target = [0] * ring.nvars
        for pos, e in zip(positions, monom):
            target[pos] = e
        terms[tuple(target)] = coeff
    return Polynomial(ring, ring.poly_ring.from_dict(terms))


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if p.ring != q.ring:
        raise ValueError("gcd across different rings")
    if p.is_zero and q.is_zero:
        return p
    return Polynomial(p.ring, p.element.gcd(q.element)).monic()


def gcd_all(polys: Iterable[Polynomial]) -> Polynomial:
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty family")
    return reduce(gcd, polys[1:], polys[0].monic())


class CommonFactorError(ArithmeticError):
    """The maps still share a factor where none may remain."""


@dataclass(frozen=True)
class Parameterization:
    """
    Mapa racional psi = (f_1 : ... : f_r) de formas con el mismo multigrado.
    Construirlo con Parameterization.build, que quita el factor común.
    """
    ring: GradedRingSpec
    maps: tuple[Polynomial, ...]
    removed_factor: Optional[Polynomial] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.maps) < 2:
            raise ValueError("A parameterization needs r >= 2 forms")
        if any(f.ring != self.ring for f in self.maps):
            raise ValueError("All maps must live in the source ring")
        if all(f.is_zero for f in self.maps):
            raise ValueError("All maps are zero")
        degrees = set()
        for f in self.maps:
            if not f.is_zero:
                if not f.is_homogeneous():
                    raise NotHomogeneousError(f"{f} is not homogeneous")
                degrees.add(f.multidegree)
        if len(degrees) != 1:
            raise NotHomogeneousError(
                "Maps have different multidegrees: " + ", ".join(sorted(str(d) for d in degrees)))

    @classmethod
    def build(cls, ring: GradedRingSpec, maps: Sequence[Polynomial]) -> "Parameterization":
        maps = tuple(maps)
        cls(ring, maps)
        common = gcd_all([f for f in maps if not f.is_zero])
        if common.is_constant():
            return cls(ring, maps)
        LOGGER.warning("Removing common factor %s from the maps", common)
        reduced = tuple(f.exquo(common) for f in maps)
        return cls(ring, reduced, common)

    @property
    def r(self) -> int:
        return len(self.maps)

    @cached_property
    def degree(self) -> MultiDegree:
        return next(f.multidegree for f in self.maps if not f.is_zero)

    @cached_property
    def target_ring(self) -> GradedRingSpec:
        return GradedRingSpec((target_names(self.ring, self.r),), self.ring.field)

    @cached_property
    def rees_ring(self) -> GradedRingSpec:
        return self.ring.extend(target_names(self.ring, self.r))

    def evaluate(self, point: Sequence) -> tuple:
        return tuple(f.evaluate(point) for f in self.maps)

    def texts(self) -> list[str]:
        return [to_text(f) for f in self.maps]

    def __hash__(self) -> int:
        return hash((self.ring, self.maps))

    def __str__(self) -> str:
        return "(" + " : ".join(self.texts()) + ")"


def target_names(ring: GradedRingSpec, r: int) -> tuple[str, ...]:
    names = tuple(f"T{i}" for i in range(1, r + 1))
    clash = set(names) & set(ring.variables)
    if clash:
        raise ValueError(f"Source variables {sorted(clash)} clash with target variables")
    return names
