"""Regularity bound for the ideal of a rational curve from its mu-basis degrees."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from model.matrixrep import curve_threshold_value
from model.polyring import InconsistencyError
from model.syzygy import MuBasis

from .implicit import degree_of_map_curve

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularityBound:
    bound: int
    degrees: tuple[int, ...]
    d: int
    r: int
    applicable: bool
    all_positive: bool

    @property
    def codim_inequality(self) -> Optional[bool]:
        """bound - 1 <= d - (r - 2), only meaningful when every mu_i >= 1."""
        if not self.all_positive:
            return None
        return self.bound - 1 <= self.d - (self.r - 2)

    def to_json(self) -> dict:
        return {"bound": self.bound, "mu": list(self.degrees), "d": self.d, "r": self.r,
                "applicable": self.applicable, "all_positive": self.all_positive,
                "codim_inequality": self.codim_inequality}


def regularity_bound_from_degrees(degrees: Sequence[int], birational: bool = True) -> RegularityBound:
    degrees = tuple(degrees)
    d = sum(degrees)
    result = RegularityBound(curve_threshold_value(degrees), degrees, d, len(degrees) + 1,
                             birational, all(m >= 1 for m in degrees))
    if result.applicable and result.codim_inequality is False:
        raise InconsistencyError(f"Bound {result.bound} violates bound - 1 <= d - (r - 2) "
                                 f"for mu = {list(degrees)}")
    if not birational:
        LOGGER.warning("Map is not birational onto its image; regularity bound not applicable")
    return result


def regularity_bound_curve(mu: Union[MuBasis, Sequence[int]],
                           birational: Optional[bool] = None) -> RegularityBound:
    """
    max_{i != j}(mu_i + mu_j); birationality is checked with degree_of_map_curve
    when a MuBasis is given and no answer is supplied.
    """
    if isinstance(mu, MuBasis):
        if birational is None:
            birational = degree_of_map_curve(mu.param) == 1
        return regularity_bound_from_degrees(mu.degrees, birational)
    return regularity_bound_from_degrees(mu, True if birational is None else birational)
