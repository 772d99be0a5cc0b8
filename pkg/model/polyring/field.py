"""
Coefficient fields: the rationals or a prime field F_p, backed by sympy domains.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

from sympy import isprime
from sympy.polys.domains import GF, QQ

from .errors import FieldCoefficientError

_ELEMENT = re.compile(r"^\s*([+-]?)\s*([0-9]+)\s*(?:/\s*([0-9]+))?\s*$")


@dataclass(frozen=True)
class FieldSpec:
    kind: str = "Q"
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("The rational field takes no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.p, int) or not isprime(self.p):
                raise ValueError(f"Modulus {self.p!r} is not a prime")
        else:
            raise ValueError(f"Unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("Fp", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    @property
    def label(self) -> str:
        return "Q" if self.is_rational else f"F{self.p}"

    @cached_property
    def domain(self):
        return QQ if self.is_rational else GF(self.p, symmetric=False)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    # ---------------------------------- conversion

    def from_int(self, n: int):
        return self.domain(n)

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise FieldCoefficientError(f"Zero denominator in {num}/{den}")
        if self.is_rational:
            return self.domain(num, den)
        if den % self.p == 0:
            raise FieldCoefficientError(f"Coefficient {num}/{den} not in F_{self.p}")
        return self.domain(num) / self.domain(den)

    def coerce(self, value: Any):
        """int, str or domain element -> domain element."""
        if isinstance(value, bool):
            raise TypeError("Booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse_element(value)
        return self.domain.convert(value)

    def canonical_int(self, a) -> int:
        """Residue in [0, p) of a prime-field element."""
        return int(a) % self.p

    def is_zero(self, a) -> bool:
        return not a

    def to_float(self, a) -> float:
        if self.is_rational:
            return int(a.numerator) / int(a.denominator)
        return float(self.canonical_int(a))

    def parse_element(self, text: str):
        """
        Lee un elemento del cuerpo escrito como "12", "-3" o "3/7".
        """
        match = _ELEMENT.match(text)
        if match is None:
            raise FieldCoefficientError(f"Not a field element: {text!r}")
        sign, num, den = match.groups()
        value = self.from_fraction(int(num), int(den) if den else 1)
        return -value if sign == "-" else value

    def format_element(self, a) -> str:
        if self.is_rational:
            num, den = int(a.numerator), int(a.denominator)
            return str(num) if den == 1 else f"{num}/{den}"
        return str(self.canonical_int(a))

    # ---------------------------------- JSON

    def to_json(self) -> Any:
        return "Q" if self.is_rational else {"Fp": self.p}

    @classmethod
    def from_json(cls, obj: Any) -> "FieldSpec":
        if obj == "Q":
            return cls.rationals()
        if isinstance(obj, dict) and set(obj) == {"Fp"}:
            return cls.prime(obj["Fp"])
        raise ValueError(f"Invalid field description: {obj!r}")


RATIONALS = FieldSpec.rationals()
