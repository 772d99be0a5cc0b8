"""
Dimension of the base locus V(I) from the Hilbert function of R/I on a
window of degrees above 2d.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from constants import BASE_LOCUS_WINDOW
from model.exactlinalg import rank
from model.polyring import MultiDegree, Parameterization, graded_dimension

from .syzygies import multiplication_map

LOGGER = logging.getLogger(__name__)


class BaseLocusKind(str, Enum):
    EMPTY = "Empty"
    DIM0 = "Dim0"
    DIM1PLUS = "Dim1plus"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class BaseLocusClass:
    kind: BaseLocusKind
    degree: Optional[int]
    start: MultiDegree
    values: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "degree": self.degree, "start": self.start.to_json(),
                "values": list(self.values)}


def quotient_dimension(param: Parameterization, nu) -> int:
    """dim_k (R/I)_nu = dim R_nu - rank of (a_i) -> sum a_i f_i in degree nu - d."""
    ring = param.ring
    nu = ring.coerce_degree(nu)
    total = graded_dimension(ring, nu)
    lower = nu - param.degree
    if not lower.is_nonnegative():
        return total
    return total - rank(multiplication_map(param, lower).matrix)


def dim_base_locus(param: Parameterization, window: int = BASE_LOCUS_WINDOW) -> BaseLocusClass:
    """
    dim (R/I)_nu para nu = 2d+1+k (k = 0..window-1, en cada componente):
    0 constante -> Empty; c > 0 constante -> Dim0(c); estrictamente creciente -> Dim1plus.
    """
    if window < 2:
        raise ValueError("The window needs at least two degrees")
    ring = param.ring
    start = MultiDegree(tuple(2 * c + 1 for c in param.degree))
    step = MultiDegree((1,) * ring.nblocks)
    values = tuple(quotient_dimension(param, start + step * k) for k in range(window))
    LOGGER.debug("dim (R/I) from %s: %s", start, list(values))
    if all(v == values[0] for v in values):
        if values[0] == 0:
            return BaseLocusClass(BaseLocusKind.EMPTY, 0, start, values)
        return BaseLocusClass(BaseLocusKind.DIM0, values[0], start, values)
    if all(a < b for a, b in zip(values, values[1:])):
        return BaseLocusClass(BaseLocusKind.DIM1PLUS, None, start, values)
    LOGGER.warning("Base locus window from %s inconclusive: %s", start, list(values))
    return BaseLocusClass(BaseLocusKind.INCONCLUSIVE, None, start, values)
